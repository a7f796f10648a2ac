import io
import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
SRC = ROOT / "src"
if str(SRC) not in sys.path:
    sys.path.insert(0, str(SRC))

from zoli.cli import main as cli_main  # noqa: E402


@pytest.fixture
def programs_dir() -> Path:
    return ROOT / "programs"


@pytest.fixture
def run_cli(capsys, monkeypatch):
    """Invoke the CLI in-process. Returns (exit_code, stdout, stderr).

    ZOLI_BLACK_HOLE is cleared unless the env argument sets it, so ambient
    shell state cannot leak into tests.
    """

    def invoke(*argv, stdin=None, env=None):
        monkeypatch.delenv("ZOLI_BLACK_HOLE", raising=False)
        for key, value in (env or {}).items():
            monkeypatch.setenv(key, value)
        if stdin is not None:
            monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
        code = cli_main(list(argv))
        captured = capsys.readouterr()
        return code, captured.out, captured.err

    return invoke
