package com.example.notepad.util;

import android.app.Activity;
import android.content.res.Configuration;

/** Scales the text size of every screen to the font size chosen by the user. */
public final class FontSizeManager {
    private FontSizeManager() {}

    public static void applyScale(Activity activity) {
        int size = PreferenceStore.get(activity).getInt("font_scale", 16);
        Configuration config = activity.getResources().getConfiguration();
        config.fontScale = size / 16f;
        activity.getResources().updateConfiguration(config, activity.getResources().getDisplayMetrics());
    }
}
