package com.example.notepad.service;

import android.app.job.JobParameters;
import android.app.job.JobService;
import com.example.notepad.data.NoteRepository;

/** Periodic background sync of notes with the cloud account. */
public class SyncService extends JobService {
    @Override
    public boolean onStartJob(JobParameters params) {
        new Thread(() -> {
            NoteRepository.getInstance(this).loadAll();
            jobFinished(params, false);
        }).start();
        return true;
    }

    @Override
    public boolean onStopJob(JobParameters params) {
        return true;
    }
}
