#!/usr/bin/env python3
"""Freeze reference H3 outputs for the conformance tests.

Requires the `h3` Python package (v4). Writes the point, pair, pentagon-pair and
neighbor CSVs next to this script. Rerun only when the sampling scheme changes.
"""
import math
import random
from pathlib import Path

import h3

SEED = 20240611
PER_RES = 2000
RESOLUTIONS = range(6, 11)
MAX_OFFSET_M = 50_000.0
EARTH_R = 6_371_008.8

here = Path(__file__).resolve().parent
rng = random.Random(SEED)


def random_point():
    z = rng.uniform(-1.0, 1.0)
    lng = rng.uniform(-180.0, 180.0)
    return math.degrees(math.asin(z)), lng


def offset(lat, lng, dist_m, bearing):
    d = dist_m / EARTH_R
    p1, l1 = math.radians(lat), math.radians(lng)
    p2 = math.asin(math.sin(p1) * math.cos(d) + math.cos(p1) * math.sin(d) * math.cos(bearing))
    l2 = l1 + math.atan2(math.sin(bearing) * math.sin(d) * math.cos(p1),
                         math.cos(d) - math.sin(p1) * math.sin(p2))
    lng2 = (math.degrees(l2) + 540.0) % 360.0 - 180.0
    return math.degrees(p2), lng2


with open(here / "h3_points.csv", "w") as f:
    f.write("res,lat,lng,cell,center_lat,center_lng,boundary\n")
    for res in RESOLUTIONS:
        for _ in range(PER_RES):
            lat, lng = random_point()
            cell = h3.latlng_to_cell(lat, lng, res)
            clat, clng = h3.cell_to_latlng(cell)
            bnd = ";".join(f"{a!r} {b!r}" for a, b in h3.cell_to_boundary(cell))
            f.write(f"{res},{lat!r},{lng!r},{cell},{clat!r},{clng!r},{bnd}\n")

with open(here / "h3_pairs.csv", "w") as f:
    f.write("res,lat1,lng1,lat2,lng2,cell1,cell2,distance\n")
    for res in RESOLUTIONS:
        for _ in range(PER_RES):
            lat1, lng1 = random_point()
            lat2, lng2 = offset(lat1, lng1, rng.uniform(0.0, MAX_OFFSET_M),
                                rng.uniform(0.0, 2 * math.pi))
            a = h3.latlng_to_cell(lat1, lng1, res)
            b = h3.latlng_to_cell(lat2, lng2, res)
            try:
                dist = h3.grid_distance(a, b)
            except Exception:
                dist = -1
            f.write(f"{res},{lat1!r},{lng1!r},{lat2!r},{lng2!r},{a},{b},{dist}\n")

# Pentagon neighbourhoods exercise the distortion and failure paths.
with open(here / "h3_pentagon_pairs.csv", "w") as f:
    f.write("res,lat1,lng1,lat2,lng2,cell1,cell2,distance\n")
    for res in RESOLUTIONS:
        edge_m = h3.average_hexagon_edge_length(res, unit="m")
        for pent in sorted(h3.get_pentagons(res)):
            plat, plng = h3.cell_to_latlng(pent)
            for _ in range(25):
                lat1, lng1 = offset(plat, plng, rng.uniform(0.0, 6 * edge_m),
                                    rng.uniform(0.0, 2 * math.pi))
                lat2, lng2 = offset(plat, plng, rng.uniform(0.0, 6 * edge_m),
                                    rng.uniform(0.0, 2 * math.pi))
                a = h3.latlng_to_cell(lat1, lng1, res)
                b = h3.latlng_to_cell(lat2, lng2, res)
                try:
                    dist = h3.grid_distance(a, b)
                except Exception:
                    dist = -1
                f.write(f"{res},{lat1!r},{lng1!r},{lat2!r},{lng2!r},{a},{b},{dist}\n")

# Ring-1 neighbourhoods, pentagons included.
with open(here / "h3_neighbors.csv", "w") as f:
    f.write("cell,neighbors\n")
    cells = []
    for res in RESOLUTIONS:
        cells.extend(sorted(h3.get_pentagons(res)))
        for _ in range(100):
            lat, lng = random_point()
            cells.append(h3.latlng_to_cell(lat, lng, res))
    for c in cells:
        ring = sorted(set(h3.grid_disk(c, 1)) - {c})
        f.write(f"{c},{' '.join(ring)}\n")
