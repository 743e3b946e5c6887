"""Test suite for qqcorr."""
