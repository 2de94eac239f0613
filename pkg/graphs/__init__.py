"""圖論核心層：資料型別、嵌入、連通度與環路搜尋"""
from graphs.errors import GraphError, PreconditionViolation, BudgetExceeded, TheoremViolation
from graphs.graph_core import Graph, Digraph, LineGraphMap, line_graph, delete_vertices, is_cubic, girth
from graphs.planar_embed import Embedding, Face, compute_embedding, exterior_face_of_H
from graphs.connectivity import is_k_connected, is_cyclically_4ec
from graphs.cycle_engine import Cycle, CycleSearch, SearchBudget, cycle_spectrum, circumference
