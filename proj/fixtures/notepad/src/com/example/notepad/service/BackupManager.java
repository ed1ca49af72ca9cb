package com.example.notepad.service;

import android.content.Context;
import android.net.Uri;
import com.example.notepad.data.Note;
import com.example.notepad.data.NoteRepository;
import java.io.IOException;
import java.io.OutputStream;
import java.util.List;

/** Exports all notes to a backup file and imports them again. */
public class BackupManager {
    private static BackupManager instance;
    private final Context context;
    private Uri lastLocation;

    private BackupManager(Context context) {
        this.context = context;
    }

    public static synchronized BackupManager get(Context context) {
        if (instance == null) instance = new BackupManager(context.getApplicationContext());
        return instance;
    }

    public Uri lastLocation() {
        return lastLocation;
    }

    /** Writes every note as JSON lines to the export backup file. */
    public void exportTo(Uri target) {
        List<Note> notes = NoteRepository.getInstance(context).loadAll();
        try (OutputStream out = context.getContentResolver().openOutputStream(target)) {
            for (Note note : notes) {
                out.write(ExportFormatter.toJsonLine(note).getBytes());
            }
            lastLocation = target;
        } catch (IOException e) {
            throw new IllegalStateException("backup export failed", e);
        }
    }

    public void importFrom(Uri source) {
        lastLocation = source;
        for (Note note : ImportParser.read(context, source)) {
            NoteRepository.getInstance(context).save(note);
        }
    }
}
