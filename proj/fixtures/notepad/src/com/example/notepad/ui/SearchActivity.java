package com.example.notepad.ui;

import android.os.Bundle;
import android.text.Editable;
import android.text.TextWatcher;
import android.widget.EditText;
import android.widget.ListView;
import com.example.notepad.util.SearchEngine;

/** Full text search over titles and bodies. */
public class SearchActivity extends BaseActivity {
    private EditText queryInput;
    private NoteListAdapter results;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_search);
        queryInput = findViewById(R.id.search_field);
        ListView list = findViewById(R.id.search_results);
        results = new NoteListAdapter(this, SearchEngine.get(this).query(""));
        list.setAdapter(results);
        queryInput.addTextChangedListener(new TextWatcher() {
            @Override public void beforeTextChanged(CharSequence s, int a, int b, int c) {}
            @Override public void onTextChanged(CharSequence s, int a, int b, int c) {}
            @Override public void afterTextChanged(Editable s) {
                results.replaceAll(SearchEngine.get(SearchActivity.this).query(s.toString()));
            }
        });
        findViewById(R.id.clear_search).setOnClickListener(v -> clearQuery());
    }

    private void clearQuery() {
        queryInput.removeTextChangedListener(null);
        queryInput.setText("");
    }
}
