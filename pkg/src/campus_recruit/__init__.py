"""Campus recruitment management service.

Multi-role (student / company / admin) hiring workflows: job postings,
resume applications with status feedback, presentation events with
approval and capacity-guarded registration, and unified search.
"""

__version__ = "0.1.0"
