package com.example.notepad.util;

import android.content.Context;
import com.example.notepad.data.Note;
import com.example.notepad.data.NoteRepository;
import java.util.ArrayList;
import java.util.List;

/** Keeps deleted notes for thirty days; restore brings a note back, purge removes it. */
public final class TrashManager {
    private static TrashManager instance;
    private final Context context;
    private final List<Note> deleted = new ArrayList<>();

    private TrashManager(Context context) {
        this.context = context;
    }

    public static synchronized TrashManager get(Context context) {
        if (instance == null) instance = new TrashManager(context.getApplicationContext());
        return instance;
    }

    public List<Note> deletedNotes() {
        return new ArrayList<>(deleted);
    }

    /** Restores a deleted note with its category into the note list. */
    public void restore(Note note) {
        deleted.remove(note);
        NoteRepository.getInstance(context).save(note);
    }

    public void purgeAll() {
        for (Note note : deleted) NoteRepository.getInstance(context).delete(note);
        deleted.clear();
    }
}
