"""Render the 1431 entries as the black/white/green pixel map.

Each entry at a concrete (p1, p2) is a real number in [-1, 1]; the value +1
is drawn black, -1 white, and anything in between as a green whose darkness
interpolates linearly.  The output is a bare P6 pixmap, written with
integer-only math so the bytes are identical on every platform.
"""

import collections
import subprocess
import sys

subprocess.run([sys.executable, "-m", "fusioncat", "render",
                "--builtin", "h3", "--params", "+1,+1",
                "--out", "h3_pixels.ppm"], check=True)

data = open("h3_pixels.ppm", "rb").read()
header, _, body = data.partition(b"255\n")
print(f"header: {header!r}")

census = collections.Counter(body[i:i + 3] for i in range(0, len(body), 3))
black = census[bytes((0, 0, 0))]
white = census[bytes((255, 255, 255))]
grey = census[bytes((128, 128, 128))]
print(f"{black} black pixels (+1 entries), {white} white (-1 entries),")
print(f"{len(census) - 3} distinct green shades, {grey} grey padding cells")
print("view it with any image tool, e.g.:  magick h3_pixels.ppm h3_pixels.png")
