package com.example.notepad.ui;

import android.os.Bundle;
import android.widget.ArrayAdapter;
import android.widget.ListView;
import com.example.notepad.data.Category;
import com.example.notepad.data.CategoryRepository;

/** Lists categories and lets the user add new ones. */
public class CategoryActivity extends BaseActivity {
    private ArrayAdapter<Category> adapter;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_categories);
        ListView list = findViewById(R.id.category_list);
        adapter = new ArrayAdapter<>(this, android.R.layout.simple_list_item_1,
                CategoryRepository.get(this).all());
        list.setAdapter(adapter);
        findViewById(R.id.add_category_button).setOnClickListener(v ->
                new CategoryDialog(this, this::onCategoryCreated).show());
    }

    private void onCategoryCreated(Category category) {
        adapter.add(category);
    }
}
