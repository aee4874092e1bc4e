"""Coloring homology and hexagon cocycle invariants of triangulated 4-manifolds."""

from hexcol.coloring import *
from hexcol.complex import *
from hexcol.config import *
from hexcol.enums import *
from hexcol.fields import *
from hexcol.fixtures import *
from hexcol.hexagon import *
from hexcol.homology import *
from hexcol.invariants import *
from hexcol.limits import *
from hexcol.linalg import *
from hexcol.pachner import *
from hexcol.polynomials import *
from hexcol.verify import *
