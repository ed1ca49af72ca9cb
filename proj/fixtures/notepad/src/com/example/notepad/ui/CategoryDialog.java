package com.example.notepad.ui;

import android.app.Dialog;
import android.content.Context;
import android.widget.EditText;
import com.example.notepad.data.Category;
import com.example.notepad.data.CategoryRepository;
import java.util.function.Consumer;

/** Modal asking for the name of a new category. */
class CategoryDialog extends Dialog {
    private final Consumer<Category> onCreated;

    CategoryDialog(Context context, Consumer<Category> onCreated) {
        super(context);
        this.onCreated = onCreated;
        setContentView(R.layout.dialog_category);
        EditText nameInput = findViewById(R.id.category_name_input);
        findViewById(R.id.dialog_ok).setOnClickListener(v -> {
            String name = nameInput.getText().toString();
            Category created = CategoryRepository.get(context).create(name);
            onCreated.accept(created);
            dismiss();
        });
        findViewById(R.id.dialog_cancel).setOnClickListener(v -> dismiss());
    }
}
