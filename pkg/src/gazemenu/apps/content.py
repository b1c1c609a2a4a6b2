"""Fixed demo content for the application probes.

Sized so that the grid apps overflow the panel (downloads scrolls, the
gallery has three levels) while the list apps fit without scrolling.
"""

from __future__ import annotations

APP_IDS = ("music", "notifications", "downloads", "favorites", "gallery", "map")

APP_LABELS = {
    "music": "Music",
    "notifications": "Notifications",
    "downloads": "Downloads",
    "favorites": "Favorites",
    "gallery": "Gallery",
    "map": "Map",
}

TRACK_TITLES = (
    "Aurora", "Basalt", "Cinder", "Dune", "Ember", "Fjord",
    "Garnet", "Harbor", "Iris", "Juniper", "Krill", "Lumen",
)
TRACK_IDS = tuple(f"track_{i + 1:02d}" for i in range(len(TRACK_TITLES)))

NOTIFICATIONS = (
    ("n1", "Mail", "Flight check-in open"),
    ("n2", "Chat", "Lena: lunch tomorrow?"),
    ("n3", "Calendar", "Standup in 15 min"),
    ("n4", "Photos", "Backup finished"),
    ("n5", "News", "Storm warning tonight"),
    ("n6", "Music", "Weekly mix ready"),
    ("n7", "System", "Update available"),
    ("n8", "Chat", "Ben: sent the files"),
)
NOTIFICATION_IDS = tuple(n[0] for n in NOTIFICATIONS)
NOTIFICATION_LABELS = {nid: f"{app}: {title}" for nid, app, title in NOTIFICATIONS}

_EXTENSIONS = ("pdf", "png", "zip", "txt", "mp4")
DOWNLOAD_IDS = tuple(f"dl_{i + 1:02d}" for i in range(30))
DOWNLOAD_NAMES = {
    fid: f"file_{i + 1:02d}.{_EXTENSIONS[i % len(_EXTENSIONS)]}"
    for i, fid in enumerate(DOWNLOAD_IDS)
}

# id -> (name, size, type, modified)
FAVORITES = {
    "fav_01": ("Flyer.pdf", "2.4 MB", "PDF document", "2026-03-14"),
    "fav_02": ("Budget.xlsx", "88 KB", "Spreadsheet", "2026-05-02"),
    "fav_03": ("Sunset.jpg", "4.1 MB", "JPEG image", "2025-11-30"),
    "fav_04": ("Notes.txt", "12 KB", "Plain text", "2026-06-21"),
    "fav_05": ("Demo.mp4", "310 MB", "Video", "2026-01-08"),
    "fav_06": ("Map.svg", "640 KB", "Vector image", "2026-02-17"),
    "fav_07": ("Thesis.pdf", "9.8 MB", "PDF document", "2025-09-04"),
    "fav_08": ("Recipe.md", "6 KB", "Markdown", "2026-07-29"),
}
FAVORITE_IDS = tuple(FAVORITES)

ALBUM_LABELS = {"album_a": "Travel", "album_b": "Family", "album_c": "Sketches"}
ALBUM_IDS = tuple(ALBUM_LABELS)
ALBUM_IMAGES = {
    album: tuple(f"img_{album[-1]}{i + 1}" for i in range(9)) for album in ALBUM_IDS
}
IMAGE_ALBUM = {img: album for album, imgs in ALBUM_IMAGES.items() for img in imgs}
# distinct three-digit tag overlaid on every image
IMAGE_NUMBERS = {
    img: 100 + (37 * i) % 900
    for i, img in enumerate(img for imgs in ALBUM_IMAGES.values() for img in imgs)
}

# id -> (content x, content y, radius), content space is the unit square
MAP_MARKERS = {
    "marker_1": (0.22, 0.58, 0.02),
    "marker_2": (0.55, 0.42, 0.02),
    "marker_3": (0.78, 0.62, 0.02),
}
MARKER_NUMBERS = {"marker_1": 583, "marker_2": 247, "marker_3": 916}
