"""Common utilities and base classes for the tet client."""
