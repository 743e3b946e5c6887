#!/usr/bin/env python
"""Simple test runner with proper environment setup."""

import os
import sys

# Quiet, machine-readable logs and the shipped numerical defaults
os.environ.update({
    "QQCORR_APP_ENV": "test",
    "QQCORR_LOG_LEVEL": "WARNING",
    "QQCORR_LOG_FORMAT": "json",
    "QQCORR_SWEEP_WORKERS": "1",
})

import pytest

if __name__ == "__main__":
    # Fast suites by default; pass -m "" to include slow ones
    args = [
        "tests/",
        "-v",
        "--tb=short",
        "--cov=qqcorr",
        "--cov-report=term-missing",
        "-m",
        "not slow",
    ]

    # Add any additional arguments
    if len(sys.argv) > 1:
        args.extend(sys.argv[1:])

    sys.exit(pytest.main(args))
