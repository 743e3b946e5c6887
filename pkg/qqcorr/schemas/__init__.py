"""Pydantic schemas for scenarios, reports and sweep IO."""
