package com.example.notepad.ui;

import androidx.appcompat.app.AppCompatActivity;
import com.example.notepad.util.FontSizeManager;

/** Common lifecycle hooks shared by every screen. */
public abstract class BaseActivity extends AppCompatActivity {
    @Override
    protected void onStart() {
        super.onStart();
        FontSizeManager.applyScale(this);
    }

    protected void toast(String message) {
        android.widget.Toast.makeText(this, message, android.widget.Toast.LENGTH_SHORT).show();
    }
}
