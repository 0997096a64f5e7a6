"""Multi-RIS multi-user downlink simulator with opportunistic user selection."""

__version__ = "0.1.0"
