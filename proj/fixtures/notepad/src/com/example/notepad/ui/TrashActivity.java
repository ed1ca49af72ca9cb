package com.example.notepad.ui;

import android.os.Bundle;
import android.widget.ListView;
import com.example.notepad.data.Note;
import com.example.notepad.util.TrashManager;

/** Deleted notes that can be restored or purged. */
public class TrashActivity extends BaseActivity {
    private NoteListAdapter adapter;
    private Note selected;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_trash);
        ListView list = findViewById(R.id.trash_list);
        adapter = new NoteListAdapter(this, TrashManager.get(this).deletedNotes());
        list.setAdapter(adapter);
        list.setOnItemClickListener((p, v, position, id) -> selected = adapter.getItem(position));
        findViewById(R.id.restore_button).setOnClickListener(v -> restoreSelected());
        findViewById(R.id.empty_trash_button).setOnClickListener(v -> TrashManager.get(this).purgeAll());
    }

    private void restoreSelected() {
        if (selected == null) return;
        Note copy = new Note(selected.getTitle(), selected.getBody());
        TrashManager.get(this).restore(copy);
        adapter.replaceAll(TrashManager.get(this).deletedNotes());
    }
}
