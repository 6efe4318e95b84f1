"""Bundled scenario configurations, addressable by name from the CLI."""
