package com.example.notepad.data;

import android.content.Context;
import java.util.ArrayList;
import java.util.List;

/** Stores categories; names are unique and case sensitive. */
public class CategoryRepository {
    private static CategoryRepository instance;
    private final List<Category> categories = new ArrayList<>();
    private long nextId = 1;

    public static synchronized CategoryRepository get(Context context) {
        if (instance == null) instance = new CategoryRepository();
        return instance;
    }

    public List<Category> all() {
        return new ArrayList<>(categories);
    }

    public Category create(String name) {
        for (Category existing : categories) {
            if (existing.getName().equals(name)) return existing;
        }
        Category category = new Category(nextId++, name);
        categories.add(category);
        return category;
    }

    public void rename(Category category, String name) {
        categories.set(categories.indexOf(category), new Category(category.getId(), name));
    }
}
