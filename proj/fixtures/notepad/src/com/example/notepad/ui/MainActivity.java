package com.example.notepad.ui;

import android.os.Bundle;
import android.view.Menu;
import android.view.MenuItem;
import android.widget.ListView;
import com.example.notepad.data.NoteRepository;
import com.example.notepad.util.ThemeManager;

/** Home screen listing all notes. */
public class MainActivity extends BaseActivity {
    private ListView noteList;
    private NoteListAdapter adapter;
    private NoteRepository repository;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        ThemeManager.applyTheme(this);
        setContentView(R.layout.activity_main);
        repository = NoteRepository.getInstance(this);
        noteList = findViewById(R.id.note_list);
        adapter = new NoteListAdapter(this, repository.loadAll());
        noteList.setAdapter(adapter);
        noteList.setOnItemClickListener((parent, view, position, id) -> openEditor(adapter.getItem(position).getId()));
        findViewById(R.id.fab_add).setOnClickListener(v -> openEditor(-1));
    }

    private void openEditor(long noteId) {
        startActivity(NoteEditorActivity.intentFor(this, noteId));
    }

    @Override
    public boolean onOptionsItemSelected(MenuItem item) {
        switch (item.getItemId()) {
            case R.id.menu_search:
                startActivity(new Intent(this, SearchActivity.class));
                return true;
            case R.id.menu_settings:
                startActivity(new Intent(this, SettingsActivity.class));
                return true;
            case R.id.menu_trash:
                startActivity(new Intent(this, TrashActivity.class));
                return true;
            case R.id.menu_categories:
                startActivity(new Intent(this, CategoryActivity.class));
                return true;
        }
        return super.onOptionsItemSelected(item);
    }

    @Override
    protected void onResume() {
        super.onResume();
        adapter.replaceAll(repository.loadAll());
    }
}
