package com.example.notepad.ui;

import android.content.Context;
import android.view.LayoutInflater;
import android.view.View;
import android.view.ViewGroup;
import android.widget.BaseAdapter;
import android.widget.TextView;
import com.example.notepad.data.Note;
import com.example.notepad.util.DateFormatter;
import java.util.List;

/** Row binding for the note list on the home screen. */
class NoteListAdapter extends BaseAdapter {
    private final Context context;
    private List<Note> notes;

    NoteListAdapter(Context context, List<Note> notes) {
        this.context = context;
        this.notes = notes;
    }

    void replaceAll(List<Note> updated) {
        notes = updated;
        notifyDataSetChanged();
    }

    @Override public int getCount() { return notes.size(); }
    @Override public Note getItem(int position) { return notes.get(position); }
    @Override public long getItemId(int position) { return notes.get(position).getId(); }

    @Override
    public View getView(int position, View row, ViewGroup parent) {
        if (row == null) {
            row = LayoutInflater.from(context).inflate(R.layout.row_note, parent, false);
        }
        Note note = notes.get(position);
        ((TextView) row.findViewById(R.id.note_row_title)).setText(note.getTitle());
        ((TextView) row.findViewById(R.id.note_row_date)).setText(DateFormatter.relative(note.getModified()));
        row.findViewById(R.id.note_row_pin).setVisibility(note.isPinned() ? View.VISIBLE : View.GONE);
        return row;
    }
}
