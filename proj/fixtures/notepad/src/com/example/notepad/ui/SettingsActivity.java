package com.example.notepad.ui;

import android.os.Bundle;
import android.widget.NumberPicker;
import android.widget.Switch;
import com.example.notepad.util.PreferenceStore;

/** Preferences: appearance, text size, sync and backup. */
public class SettingsActivity extends BaseActivity {
    static final String KEY_FONT_SIZE = "font_size";
    static final String KEY_FONT_SCALE = "font_scale";

    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_settings);
        PreferenceStore prefs = PreferenceStore.get(this);

        Switch themeSwitch = findViewById(R.id.theme_switch);
        themeSwitch.setChecked(prefs.isDarkTheme());
        themeSwitch.setOnCheckedChangeListener(new ThemeSwitchListener(this));

        NumberPicker picker = findViewById(R.id.font_size_picker);
        picker.setMinValue(12);
        picker.setMaxValue(28);
        picker.setValue(prefs.getInt(KEY_FONT_SCALE, 16));
        picker.setOnValueChangedListener((p, oldValue, newValue) -> prefs.putInt(KEY_FONT_SIZE, newValue));

        Switch sync = findViewById(R.id.sync_toggle);
        sync.setChecked(prefs.isSyncEnabled());
        sync.setOnCheckedChangeListener((b, checked) -> prefs.setSyncEnabled(checked));

        findViewById(R.id.backup_button).setOnClickListener(v -> startActivity(new Intent(this, BackupActivity.class)));
        findViewById(R.id.about_button).setOnClickListener(v -> startActivity(new Intent(this, AboutActivity.class)));
    }
}
