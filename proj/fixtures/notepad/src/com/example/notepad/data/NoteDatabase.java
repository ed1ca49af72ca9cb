package com.example.notepad.data;

import android.content.ContentValues;
import android.content.Context;
import android.database.Cursor;
import android.database.sqlite.SQLiteDatabase;
import android.database.sqlite.SQLiteOpenHelper;
import java.util.ArrayList;
import java.util.List;

/** SQLite schema and raw queries for notes, categories and reminders. */
class NoteDatabase extends SQLiteOpenHelper {
    private static final int SCHEMA_VERSION = 4;

    NoteDatabase(Context context) {
        super(context, "notes.db", null, SCHEMA_VERSION);
    }

    @Override
    public void onCreate(SQLiteDatabase db) {
        db.execSQL("CREATE TABLE notes (_id INTEGER PRIMARY KEY, title TEXT, body TEXT, category INTEGER, modified INTEGER, deleted INTEGER, pinned INTEGER)");
        db.execSQL("CREATE TABLE categories (_id INTEGER PRIMARY KEY, name TEXT UNIQUE)");
        db.execSQL("CREATE TABLE reminders (_id INTEGER PRIMARY KEY, note INTEGER, due INTEGER)");
    }

    @Override
    public void onUpgrade(SQLiteDatabase db, int oldVersion, int newVersion) {
        if (oldVersion < 4) db.execSQL("ALTER TABLE notes ADD COLUMN pinned INTEGER DEFAULT 0");
    }

    List<Note> queryNotes(String selection, String order) {
        List<Note> out = new ArrayList<>();
        try (Cursor c = getReadableDatabase().query("notes", null, selection, null, null, null, order)) {
            while (c.moveToNext()) {
                Note n = new Note(c.getString(1), c.getString(2));
                n.setId(c.getLong(0));
                n.setCategoryId(c.getLong(3));
                out.add(n);
            }
        }
        return out;
    }

    long insertNote(Note note) {
        return getWritableDatabase().insert("notes", null, values(note));
    }

    void updateNote(Note note) {
        getWritableDatabase().update("notes", values(note), "_id = " + note.getId(), null);
    }

    void markDeleted(long id, boolean deleted) {
        ContentValues v = new ContentValues();
        v.put("deleted", deleted ? 1 : 0);
        getWritableDatabase().update("notes", v, "_id = " + id, null);
    }

    void deleteNote(long id) {
        getWritableDatabase().delete("notes", "_id = " + id, null);
    }

    private static ContentValues values(Note note) {
        ContentValues v = new ContentValues();
        v.put("title", note.getTitle());
        v.put("body", note.getBody());
        v.put("category", note.getCategoryId());
        v.put("modified", note.getModified());
        return v;
    }
}
