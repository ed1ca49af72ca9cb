package com.example.notepad.service;

import android.app.NotificationManager;
import android.content.BroadcastReceiver;
import android.content.Context;
import android.content.Intent;
import androidx.core.app.NotificationCompat;

/** Posts the reminder notification when an alarm fires. */
public class NotificationHelper extends BroadcastReceiver {
    private static final String CHANNEL = "reminders";

    @Override
    public void onReceive(Context context, Intent intent) {
        long noteId = intent.getLongExtra("note", -1);
        NotificationManager manager = context.getSystemService(NotificationManager.class);
        manager.notify((int) noteId, new NotificationCompat.Builder(context, CHANNEL)
                .setContentTitle("Reminder")
                .setContentText("You asked to be reminded about a note")
                .setAutoCancel(true)
                .build());
    }
}
