"""
Run journal - one JSON line per CLI job.
Records the command, its parameters, the exit code and the wall time of every job.
"""

import json
from dataclasses import asdict, dataclass, field
from datetime import datetime
from pathlib import Path
from typing import Optional


@dataclass
class JobLogEntry:
    """A single CLI job."""
    timestamp: str
    command: str
    params: dict = field(default_factory=dict)
    exit_code: int = 0
    elapsed_ms: int = 0
    error: Optional[str] = None
    summary: dict = field(default_factory=dict)


class RunJournal:
    """JSONL journal of CLI jobs, one file per session."""

    def __init__(self, journal_dir: str, session_id: str = None):
        self.journal_dir = Path(journal_dir)
        self.journal_dir.mkdir(parents=True, exist_ok=True)
        self.session_id = session_id or datetime.now().strftime("%Y-%m-%d_%H-%M-%S")
        self.journal_file = self.journal_dir / f"jobs_{self.session_id}.jsonl"

    def log_job(
        self,
        command: str,
        params: dict = None,
        exit_code: int = 0,
        elapsed_ms: int = 0,
        error: str = None,
        summary: dict = None,
    ) -> JobLogEntry:
        """Append a job to the session file."""
        entry = JobLogEntry(
            timestamp=datetime.now().isoformat(),
            command=command,
            params=params or {},
            exit_code=exit_code,
            elapsed_ms=elapsed_ms,
            error=error,
            summary=summary or {},
        )
        with open(self.journal_file, "a") as f:
            f.write(json.dumps(asdict(entry), sort_keys=True, default=str) + "\n")
        return entry

    def list_sessions(self) -> list:
        """List all journal sessions, newest first."""
        sessions = []
        for f in sorted(self.journal_dir.glob("jobs_*.jsonl"), reverse=True):
            sessions.append({
                "session_id": f.stem.replace("jobs_", ""),
                "file": str(f),
                "size": f.stat().st_size,
                "modified": datetime.fromtimestamp(f.stat().st_mtime).isoformat(),
            })
        return sessions

    def get_entries(self, session_id: str = None, limit: int = 100) -> list:
        """Entries of a session (default: the current one)."""
        journal_file = self.journal_file if session_id is None else self.journal_dir / f"jobs_{session_id}.jsonl"
        if not journal_file.exists():
            return []
        entries = []
        with open(journal_file) as f:
            for line in f:
                if line.strip():
                    entries.append(json.loads(line))
        return entries[-limit:]

    def get_stats(self, session_id: str = None) -> dict:
        """Job counts per command and per exit code."""
        entries = self.get_entries(session_id, limit=100000)
        stats = {
            "total": len(entries),
            "failed": 0,
            "by_command": {},
            "by_exit_code": {},
            "total_ms": 0,
        }
        for entry in entries:
            code = entry.get("exit_code", 0)
            if code:
                stats["failed"] += 1
            command = entry.get("command", "")
            stats["by_command"][command] = stats["by_command"].get(command, 0) + 1
            stats["by_exit_code"][str(code)] = stats["by_exit_code"].get(str(code), 0) + 1
            stats["total_ms"] += entry.get("elapsed_ms", 0)
        return stats
