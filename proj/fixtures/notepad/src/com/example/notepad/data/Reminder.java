package com.example.notepad.data;

/** Alarm attached to a note. */
public class Reminder {
    private final long noteId;
    private final long dueMillis;

    public Reminder(long noteId, long dueMillis) {
        this.noteId = noteId;
        this.dueMillis = dueMillis;
    }

    public long getNoteId() { return noteId; }
    public long getDueMillis() { return dueMillis; }
}
