"""Core configuration, logging, errors and linear algebra."""
