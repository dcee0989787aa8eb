"""Command-line support: settings, logging, progress display and text rendering."""
