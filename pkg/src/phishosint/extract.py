"""Pull URLs, hostnames, email addresses and literal IPv4 addresses out of
email bodies.

All extractors are pure and total: they never raise on arbitrary Unicode
input, and ASCII tokens are found regardless of the surrounding script.
Hostname matching is deliberately ASCII-only (no IDN/punycode).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

# Hostname: >=2 dot-separated labels of [a-z0-9-] without leading/trailing
# hyphen; the final label is alphabetic and at least 2 chars.
_LABEL = r"[a-z0-9](?:[a-z0-9-]*[a-z0-9])?"
_HOSTNAME = rf"(?:{_LABEL}\.)+[a-z]{{2,}}"

_URL_RE = re.compile(
    rf"\b(https?)://({_HOSTNAME})(:\d+)?([^\s<>\"']*)",
    re.IGNORECASE,
)
_EMAIL_RE = re.compile(
    rf"[A-Za-z0-9._%+-]+@{_HOSTNAME}",
    re.IGNORECASE,
)
_BARE_HOST_RE = re.compile(
    rf"(?<![a-zA-Z0-9.-])({_HOSTNAME})(?![a-zA-Z0-9-])",
    re.IGNORECASE,
)
_IP_RE = re.compile(r"\b(?:\d{1,3}\.){3}\d{1,3}\b")

# Sentence punctuation stripped from the tail of matched URLs/addresses.
_TRAILING_PUNCT = '.,;:!?)"'


@dataclass(frozen=True)
class ExtractionResult:
    """Everything scannable found in one email body."""

    urls: tuple[str, ...] = ()
    domains: tuple[str, ...] = ()
    emails: tuple[str, ...] = ()
    ips: tuple[str, ...] = ()

    def has_artifacts(self) -> bool:
        return bool(self.urls or self.domains or self.emails)


def _strip_trailing_punct(token: str) -> str:
    return token.rstrip(_TRAILING_PUNCT)


def extract_urls(body: str) -> list[str]:
    """Return http(s) URLs with scheme and hostname lowercased.

    Trailing sentence punctuation is stripped; path case is preserved.
    """
    out = []
    for m in _URL_RE.finditer(body):
        scheme, host, port, rest = m.groups()
        rest = _strip_trailing_punct(rest or "")
        url = f"{scheme.lower()}://{host.lower()}{port or ''}{rest}"
        out.append(url)
    return out


def extract_emails(body: str) -> list[str]:
    """Return plausible email addresses (local part grammar, ASCII hostname)."""
    return [_strip_trailing_punct(m.group(0)) for m in _EMAIL_RE.finditer(body)]


def extract_ips(body: str) -> list[str]:
    """Return dotted-quad IPv4 literals, occurrences preserved."""
    out = []
    for m in _IP_RE.finditer(body):
        octets = m.group(0).split(".")
        if all(int(o) <= 255 for o in octets):
            out.append(m.group(0))
    return out


def extract_domains(body: str) -> list[str]:
    """Return distinct lowercase hostnames in order of first occurrence.

    The union of URL hostnames, email-address domains and bare hostnames;
    each domain is reported once.
    """
    found: list[tuple[int, str]] = []
    for m in _URL_RE.finditer(body):
        found.append((m.start(2), m.group(2).lower()))
    for m in _EMAIL_RE.finditer(body):
        addr = _strip_trailing_punct(m.group(0))
        found.append((m.start() + addr.rindex("@") + 1, addr.rsplit("@", 1)[1].lower()))
    for m in _BARE_HOST_RE.finditer(body):
        found.append((m.start(1), m.group(1).lower()))

    found.sort(key=lambda t: t[0])
    seen = set()
    ordered = []
    for _, host in found:
        if host not in seen:
            seen.add(host)
            ordered.append(host)
    return ordered


def extract_all(body: str) -> ExtractionResult:
    """Run every extractor over one body."""
    return ExtractionResult(
        urls=tuple(extract_urls(body)),
        domains=tuple(extract_domains(body)),
        emails=tuple(extract_emails(body)),
        ips=tuple(extract_ips(body)),
    )
