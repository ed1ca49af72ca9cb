package com.example.notepad.ui;

import android.os.Bundle;
import android.widget.TextView;

/** Version and license information. */
public class AboutActivity extends BaseActivity {
    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_about);
        ((TextView) findViewById(R.id.version_text)).setText(BuildConfig.VERSION_NAME);
        findViewById(R.id.licenses_button).setOnClickListener(v -> showLicenses());
    }

    private void showLicenses() {
        startActivity(new Intent(this, LicensesActivity.class));
    }
}
