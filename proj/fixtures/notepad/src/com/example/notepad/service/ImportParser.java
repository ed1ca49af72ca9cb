package com.example.notepad.service;

import android.content.Context;
import android.net.Uri;
import com.example.notepad.data.Note;
import java.io.BufferedReader;
import java.io.InputStreamReader;
import java.util.ArrayList;
import java.util.List;
import org.json.JSONObject;

/** Reads notes back from an exported backup file. */
final class ImportParser {
    private ImportParser() {}

    static List<Note> read(Context context, Uri source) {
        List<Note> notes = new ArrayList<>();
        try (BufferedReader reader = new BufferedReader(new InputStreamReader(
                context.getContentResolver().openInputStream(source)))) {
            String line;
            while ((line = reader.readLine()) != null) {
                JSONObject o = new JSONObject(line);
                notes.add(new Note(o.optString("title"), o.optString("body")));
            }
        } catch (Exception e) {
            // Partial imports keep whatever was parsed.
        }
        return notes;
    }
}
