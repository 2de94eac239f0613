"""建構程序：無環子有向圖、triangle 縮短、環的提升與 Λ 延伸"""
from constructions.acyclic import acyclic_spanning_subdigraph, is_acyclic
from constructions.triangles import TriangleClassification, classify_triangles, shorten_by_centers
from constructions.lifting import LambdaSet, SMap, compute_s_map, extend_by_lambda, lift_cycle, maximal_lambda
