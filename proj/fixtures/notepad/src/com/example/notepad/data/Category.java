package com.example.notepad.data;

/** Named folder that groups notes. */
public class Category {
    private final long id;
    private final String name;

    public Category(long id, String name) {
        this.id = id;
        this.name = name;
    }

    public long getId() { return id; }
    public String getName() { return name; }

    @Override
    public String toString() { return name; }
}
