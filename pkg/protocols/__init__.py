from protocols.graph6 import parse_graph6, write_graph6, read_graph6_lines
from protocols.planar_code import parse_planar_code, write_planar_code
