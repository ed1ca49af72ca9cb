package com.example.notepad.util;

import android.text.format.DateUtils;

/** Human friendly timestamps such as "5 minutes ago". */
public final class DateFormatter {
    private DateFormatter() {}

    public static CharSequence relative(long millis) {
        return DateUtils.getRelativeTimeSpanString(millis, System.currentTimeMillis(), DateUtils.MINUTE_IN_MILLIS);
    }
}
