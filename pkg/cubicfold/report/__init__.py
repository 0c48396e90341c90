"""Verification reports and their JSON and markdown renderings"""
from .models import MATCH, MISMATCH, REPAIRED_MATCH, STATUSES, UNVERIFIABLE, ClaimRecord, VerificationReport
from .renderers import render, render_json, render_markdown, render_section, validate_report_data
