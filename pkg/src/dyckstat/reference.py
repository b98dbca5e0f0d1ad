"""Published reference values, transcribed cell by cell.

Tables are stored exactly as printed, including any cell that disagrees
with the computed value; :data:`ERRATA` lists those cells together with
the value every independent method produces.
"""
from __future__ import annotations

__all__ = ["TABLES", "TABLE_COUNT_ID", "SEQUENCES", "SEQUENCE_COUNT_ID", "ERRATA", "table_cells"]

# table id -> (count id, rows); row n lists columns k = 0, 1, ...
TABLE_COUNT_ID = {
    "1.1": "C_PARTIAL",
    "2.1": "F",
    "2.2": "S",
    "2.3": "E",
    "2.4": "L",
    "2.5": "S_STAR",
    "3.1": "V",
    "3.2": "V_L",
    "3.3": "V_STAR",
}

TABLES: dict[str, list[list[int]]] = {
    "1.1": [
        [1],
        [1, 1],
        [2, 2, 1],
        [5, 5, 3, 1],
        [14, 14, 9, 4, 1],
        [42, 42, 28, 14, 5, 1],
        [132, 132, 90, 48, 20, 6, 1],
        [429, 429, 297, 165, 75, 27, 7, 1],
    ],
    "2.1": [
        [1],
        [2, 1],
        [5, 3, 1],
        [15, 9, 4, 1],
        [49, 29, 14, 5, 1],
        [168, 98, 49, 20, 6, 1],
    ],
    "2.2": [
        [1],
        [2, 1],
        [5, 2, 1],
        [15, 5, 2, 1],
        [49, 15, 5, 2, 1],
        [168, 49, 15, 5, 2, 1],
    ],
    "2.3": [
        [1],
        [3, 1],
        [10, 4, 1],
        [35, 15, 5, 1],
        [126, 56, 21, 6, 1],
        [462, 210, 84, 28, 7, 1],
    ],
    "2.4": [
        [1],
        [5, 1],
        [21, 5, 1],
        [84, 21, 5, 1],
        [330, 84, 21, 5, 1],
        [1287, 330, 84, 21, 5, 1],
    ],
    "2.5": [
        [1],
        [2, 1],
        [6, 2, 1],
        [20, 6, 2, 1],
        [70, 20, 6, 2, 1],
        [252, 70, 20, 6, 2, 1],
    ],
    # valley tables only have cells for 2k <= n
    "3.1": [
        [1],
        [3],
        [10, 1],
        [35, 5],
        [126, 21, 1],
        [462, 84, 7],
        [1716, 330, 36, 1],
    ],
    "3.2": [
        [1],
        [5],
        [21, 1],
        [84, 7],
        [330, 36, 1],
        [1287, 165, 9],
        [5005, 715, 55, 1],
    ],
    "3.3": [
        [1],
        [4],
        [15, 1],
        [56, 6],
        [210, 28, 1],
        [729, 120, 8],
        [3003, 495, 45, 1],
    ],
}

# (table id, n, k) -> value computed by formula, series and enumeration alike
ERRATA = {
    ("3.3", 5, 0): 792,
}

SEQUENCE_COUNT_ID = {"sp": "SP_TOTAL", "ap": "AP_TOTAL", "sv": "SV_TOTAL"}

SEQUENCES = {
    "sp": [1, 3, 8, 23, 72, 240, 834, 2979, 10844, 40016],
    "ap": [2, 12, 54, 222, 882, 3456, 13466, 52362],
    "sv": [1, 3, 11, 40, 148, 553, 2083],
}


def table_cells(table_id: str, max_n: int | None = None):
    """Yield ``(n, k, printed)`` for every printed cell of a table."""
    for n, row in enumerate(TABLES[table_id]):
        if max_n is not None and n > max_n:
            break
        for k, v in enumerate(row):
            yield n, k, v
