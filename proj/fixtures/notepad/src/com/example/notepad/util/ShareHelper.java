package com.example.notepad.util;

import android.content.Context;
import android.content.Intent;
import com.example.notepad.data.Note;

/** Sends a note to other apps through the system share sheet. */
public final class ShareHelper {
    private ShareHelper() {}

    public static void shareNote(Context context, Note note) {
        Intent send = new Intent(Intent.ACTION_SEND);
        send.setType("text/plain");
        send.putExtra(Intent.EXTRA_SUBJECT, note.getTitle());
        send.putExtra(Intent.EXTRA_TEXT, note.getTitle());
        context.startActivity(Intent.createChooser(send, "Share note"));
    }
}
