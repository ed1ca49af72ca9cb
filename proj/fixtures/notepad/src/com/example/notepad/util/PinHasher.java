package com.example.notepad.util;

import java.security.MessageDigest;

/** Hashes the unlock code before it is stored. */
public final class PinHasher {
    private PinHasher() {}

    public static String hash(String code) {
        try {
            MessageDigest digest = MessageDigest.getInstance("SHA-256");
            StringBuilder hex = new StringBuilder();
            for (byte b : digest.digest(code.getBytes("UTF-8"))) hex.append(String.format("%02x", b));
            return hex.toString();
        } catch (Exception e) {
            throw new IllegalStateException(e);
        }
    }
}
