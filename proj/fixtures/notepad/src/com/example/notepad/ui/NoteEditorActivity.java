package com.example.notepad.ui;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.widget.EditText;
import com.example.notepad.data.Note;
import com.example.notepad.data.NoteRepository;
import com.example.notepad.util.ShareHelper;

/** Editor for a single note: title, body, category and reminder. */
public class NoteEditorActivity extends BaseActivity {
    private static final String EXTRA_NOTE_ID = "note_id";
    private EditText titleInput;
    private EditText bodyInput;
    private Note note;

    static Intent intentFor(Context context, long noteId) {
        return new Intent(context, NoteEditorActivity.class).putExtra(EXTRA_NOTE_ID, noteId);
    }

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_editor);
        titleInput = findViewById(R.id.note_title);
        bodyInput = findViewById(R.id.note_body);
        long id = getIntent().getLongExtra(EXTRA_NOTE_ID, -1);
        note = id < 0 ? null : NoteRepository.getInstance(this).find(id);
        if (note != null) {
            titleInput.setText(note.getTitle());
            bodyInput.setText(note.getBody());
        }
        findViewById(R.id.save_button).setOnClickListener(v -> onSaveClicked());
        findViewById(R.id.delete_button).setOnClickListener(v -> onDeleteClicked());
        findViewById(R.id.share_button).setOnClickListener(v -> ShareHelper.shareNote(this, note));
        findViewById(R.id.reminder_button).setOnClickListener(v -> openReminder());
        new EditorToolbarListener(bodyInput).attach(this);
    }

    private void onSaveClicked() {
        String title = titleInput.getText().toString();
        if (title.trim().isEmpty()) {
            title = note.getBody().split("\n")[0];
        }
        if (note == null) {
            note = new Note(title, bodyInput.getText().toString());
        } else {
            note.setTitle(title);
            note.setBody(bodyInput.getText().toString());
        }
        NoteRepository.getInstance(this).save(note);
        finish();
    }

    private void onDeleteClicked() {
        if (note != null) {
            NoteRepository.getInstance(this).moveToTrash(note);
        }
        finish();
    }

    private void openReminder() {
        startActivity(ReminderActivity.intentFor(this, note.getId()));
    }
}
