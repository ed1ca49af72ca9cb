package com.example.notepad.ui;

import android.app.Activity;
import android.widget.CompoundButton;
import com.example.notepad.util.PreferenceStore;

/** Persists the dark mode toggle from the settings screen. */
class ThemeSwitchListener implements CompoundButton.OnCheckedChangeListener {
    private final Activity activity;

    ThemeSwitchListener(Activity activity) {
        this.activity = activity;
    }

    @Override
    public void onCheckedChanged(CompoundButton button, boolean dark) {
        PreferenceStore.get(activity).setDarkTheme(dark);
        activity.recreate();
    }
}
