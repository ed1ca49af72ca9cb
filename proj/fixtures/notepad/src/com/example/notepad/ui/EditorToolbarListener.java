package com.example.notepad.ui;

import android.app.Activity;
import android.text.Spannable;
import android.text.style.StyleSpan;
import android.widget.EditText;

/** Handles the formatting toolbar above the editor body. */
class EditorToolbarListener {
    private final EditText body;

    EditorToolbarListener(EditText body) {
        this.body = body;
    }

    void attach(Activity activity) {
        activity.findViewById(R.id.format_bold).setOnClickListener(v -> applyBold());
        activity.findViewById(R.id.format_bullet).setOnClickListener(v -> insertBullet());
    }

    private void applyBold() {
        int start = body.getSelectionStart();
        int end = body.getSelectionEnd();
        body.getText().setSpan(new StyleSpan(android.graphics.Typeface.BOLD), start, end, Spannable.SPAN_EXCLUSIVE_EXCLUSIVE);
    }

    private void insertBullet() {
        body.getText().insert(body.getSelectionStart(), "• ");
    }
}
