package com.example.notepad.service;

import android.app.AlarmManager;
import android.app.PendingIntent;
import android.content.Context;
import android.content.Intent;
import com.example.notepad.data.Reminder;

/** Registers reminder alarms with the system alarm service. */
public class ReminderScheduler {
    private static ReminderScheduler instance;
    private final Context context;

    private ReminderScheduler(Context context) {
        this.context = context;
    }

    public static synchronized ReminderScheduler get(Context context) {
        if (instance == null) instance = new ReminderScheduler(context.getApplicationContext());
        return instance;
    }

    /** Schedules an exact alarm at the reminder due time; the alarm fires a notification. */
    public void schedule(Reminder reminder) {
        AlarmManager alarms = (AlarmManager) context.getSystemService(Context.ALARM_SERVICE);
        alarms.setExact(AlarmManager.RTC_WAKEUP, reminder.getDueMillis(), pending(reminder.getNoteId()));
    }

    public void cancel(long noteId) {
        AlarmManager alarms = (AlarmManager) context.getSystemService(Context.ALARM_SERVICE);
        alarms.cancel(pending(noteId));
    }

    private PendingIntent pending(long noteId) {
        Intent intent = new Intent(context, NotificationHelper.class).putExtra("note", noteId);
        return PendingIntent.getBroadcast(context, (int) noteId, intent, PendingIntent.FLAG_IMMUTABLE);
    }
}
