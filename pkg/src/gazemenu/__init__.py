"""gazemenu: a one-handed gaze-and-pinch menu system as a simulation
engine, deterministic replay harness, and live session service."""

__version__ = "0.1.0"
