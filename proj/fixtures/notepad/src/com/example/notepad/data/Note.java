package com.example.notepad.data;

/** A note with title, body, category and timestamps. */
public class Note {
    private long id = -1;
    private String title;
    private String body;
    private long categoryId = -1;
    private long modified;
    private boolean pinned;

    public Note(String title, String body) {
        this.title = title;
        this.body = body;
        this.modified = System.currentTimeMillis();
    }

    public long getId() { return id; }
    void setId(long id) { this.id = id; }
    public String getTitle() { return title; }
    public void setTitle(String title) { this.title = title; }
    public String getBody() { return body; }
    public void setBody(String body) { this.body = body; }
    public long getCategoryId() { return categoryId; }
    public void setCategoryId(long categoryId) { this.categoryId = categoryId; }
    public long getModified() { return modified; }
    public boolean isPinned() { return pinned; }
    public void setPinned(boolean pinned) { this.pinned = pinned; }
}
