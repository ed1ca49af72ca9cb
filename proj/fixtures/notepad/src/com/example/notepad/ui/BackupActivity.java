package com.example.notepad.ui;

import android.net.Uri;
import android.os.Bundle;
import android.widget.TextView;
import com.example.notepad.service.BackupManager;

/** Export and import of the whole notebook. */
public class BackupActivity extends BaseActivity {
    private Uri location;

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_backup);
        TextView locationView = findViewById(R.id.backup_location);
        location = BackupManager.get(this).lastLocation();
        locationView.setText(location == null ? "" : location.getPath());
        findViewById(R.id.export_button).setOnClickListener(v -> BackupManager.get(this).exportTo(location.buildUpon().build()));
        findViewById(R.id.import_button).setOnClickListener(v -> BackupManager.get(this).importFrom(location));
    }
}
