package com.example.notepad.ui;

import android.content.Context;
import android.content.Intent;
import android.os.Bundle;
import android.widget.TimePicker;
import com.example.notepad.data.Reminder;
import com.example.notepad.service.ReminderScheduler;
import java.util.Calendar;

/** Picks the time of a note reminder. */
public class ReminderActivity extends BaseActivity {
    private static final String EXTRA_NOTE = "note";
    private long noteId;

    static Intent intentFor(Context context, long noteId) {
        return new Intent(context, ReminderActivity.class).putExtra(EXTRA_NOTE, noteId);
    }

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_reminder);
        noteId = getIntent().getLongExtra(EXTRA_NOTE, -1);
        TimePicker picker = findViewById(R.id.reminder_time_picker);
        findViewById(R.id.set_reminder_button).setOnClickListener(v -> {
            Calendar when = Calendar.getInstance();
            when.set(Calendar.HOUR, picker.getHour());
            when.set(Calendar.MINUTE, picker.getMinute());
            ReminderScheduler.get(this).schedule(new Reminder(noteId, when.getTimeInMillis()));
            finish();
        });
        findViewById(R.id.cancel_reminder_button).setOnClickListener(v -> {
            ReminderScheduler.get(this).cancel(noteId);
            finish();
        });
    }
}
