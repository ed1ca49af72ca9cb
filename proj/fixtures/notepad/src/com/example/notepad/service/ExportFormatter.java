package com.example.notepad.service;

import com.example.notepad.data.Note;
import org.json.JSONObject;

/** One JSON object per exported note. */
final class ExportFormatter {
    private ExportFormatter() {}

    static String toJsonLine(Note note) {
        try {
            JSONObject o = new JSONObject();
            o.put("title", note.getTitle());
            o.put("body", note.getBody());
            o.put("category", note.getCategoryId());
            return o.toString() + "\n";
        } catch (org.json.JSONException e) {
            return "{}\n";
        }
    }
}
