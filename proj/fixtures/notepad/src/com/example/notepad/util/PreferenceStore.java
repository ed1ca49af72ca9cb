package com.example.notepad.util;

import android.content.Context;
import android.content.SharedPreferences;

/** Typed access to shared preferences: theme, font, sync, pin. */
public final class PreferenceStore {
    private static PreferenceStore instance;
    private final SharedPreferences prefs;

    private PreferenceStore(Context context) {
        prefs = context.getSharedPreferences("settings", Context.MODE_PRIVATE);
    }

    public static synchronized PreferenceStore get(Context context) {
        if (instance == null) instance = new PreferenceStore(context.getApplicationContext());
        return instance;
    }

    public boolean isDarkTheme() { return prefs.getBoolean("dark_theme", false); }
    public void setDarkTheme(boolean dark) { prefs.edit().putBoolean("dark_theme", dark).apply(); }
    public boolean isSyncEnabled() { return prefs.getBoolean("sync", true); }
    public void setSyncEnabled(boolean on) { prefs.edit().putBoolean("sync", on).apply(); }
    public int getInt(String key, int fallback) { return prefs.getInt(key, fallback); }
    public void putInt(String key, int value) { prefs.edit().putInt(key, value).apply(); }
    public String getPinHash() { return prefs.getString("pin_hash", ""); }
    public void setPinHash(String hash) { prefs.edit().putString("pin_hash", hash).apply(); }
}
