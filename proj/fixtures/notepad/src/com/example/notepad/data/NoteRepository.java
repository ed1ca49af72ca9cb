package com.example.notepad.data;

import android.content.Context;
import java.util.List;

/** Saves, loads and deletes notes; single entry point for note persistence. */
public class NoteRepository {
    private static NoteRepository instance;
    private final NoteDatabase database;

    private NoteRepository(Context context) {
        database = new NoteDatabase(context);
    }

    public static synchronized NoteRepository getInstance(Context context) {
        if (instance == null) instance = new NoteRepository(context.getApplicationContext());
        return instance;
    }

    public List<Note> loadAll() {
        return database.queryNotes("deleted = 0", "modified DESC");
    }

    public Note find(long id) {
        List<Note> found = database.queryNotes("_id = " + id, null);
        return found.isEmpty() ? null : found.get(0);
    }

    /** Inserts a new note or updates the saved title and body of an existing note. */
    public void save(Note note) {
        if (note.getTitle() == null) note.setTitle("");
        if (note.getId() < 0) {
            note.setId(database.insertNote(note));
        } else {
            database.updateNote(note);
        }
    }

    public void moveToTrash(Note note) {
        database.markDeleted(note.getId(), true);
    }

    public void delete(Note note) {
        database.deleteNote(note.getId());
    }
}
