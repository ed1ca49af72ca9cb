package com.example.notepad.util;

import android.app.Activity;
import androidx.appcompat.app.AppCompatDelegate;

/** Applies light or dark colors, background and night mode to screens. */
public final class ThemeManager {
    private ThemeManager() {}

    /** Switches every screen between the dark night mode and the white day background. */
    public static void applyTheme(Activity activity) {
        boolean dark = PreferenceStore.get(activity).isDarkTheme();
        AppCompatDelegate.setDefaultNightMode(dark
                ? AppCompatDelegate.MODE_NIGHT_YES
                : AppCompatDelegate.MODE_NIGHT_NO);
        activity.getWindow().getDecorView().setBackgroundColor(dark ? 0xFF121212 : 0xFFFFFFFF);
    }

    public static boolean isDarkMode(Activity activity) {
        return PreferenceStore.get(activity).isDarkTheme();
    }
}
