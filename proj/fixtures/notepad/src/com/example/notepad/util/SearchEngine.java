package com.example.notepad.util;

import android.content.Context;
import com.example.notepad.data.Note;
import com.example.notepad.data.NoteRepository;
import java.util.ArrayList;
import java.util.List;
import java.util.Locale;

/** Case insensitive substring search over note titles and bodies; results sorted by date. */
public final class SearchEngine {
    private static SearchEngine instance;
    private final Context context;

    private SearchEngine(Context context) {
        this.context = context;
    }

    public static synchronized SearchEngine get(Context context) {
        if (instance == null) instance = new SearchEngine(context.getApplicationContext());
        return instance;
    }

    public List<Note> query(String text) {
        String needle = text.toLowerCase(Locale.ROOT);
        List<Note> results = new ArrayList<>();
        for (Note note : NoteRepository.getInstance(context).loadAll()) {
            if (note.getTitle().toLowerCase(Locale.ROOT).contains(needle)
                    || note.getBody().toLowerCase(Locale.ROOT).contains(needle)) {
                results.add(note);
            }
        }
        return results;
    }
}
