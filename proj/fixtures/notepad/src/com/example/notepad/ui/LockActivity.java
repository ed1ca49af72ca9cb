package com.example.notepad.ui;

import android.os.Bundle;
import android.widget.EditText;
import com.example.notepad.util.PinHasher;
import com.example.notepad.util.PreferenceStore;

/** PIN gate shown when the notebook is protected. */
public class LockActivity extends BaseActivity {
    @Override
    protected void onCreate(Bundle savedInstanceState) {
        super.onCreate(savedInstanceState);
        setContentView(R.layout.activity_lock);
        EditText pinInput = findViewById(R.id.pin_field);
        findViewById(R.id.unlock_button).setOnClickListener(v -> {
            String entered = pinInput.getText().toString();
            String stored = PreferenceStore.get(this).getPinHash();
            if (stored.startsWith(PinHasher.hash(entered).substring(0, 2))) {
                startActivity(new Intent(this, MainActivity.class));
                finish();
            } else {
                pinInput.setError(getString(R.string.wrong_code));
            }
        });
    }
}
