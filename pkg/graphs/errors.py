"""
錯誤類別
圖形核心、嵌入、環路搜尋與建構程序共用的例外階層。
"""

from typing import Optional


class GraphError(Exception):
    """所有圖論模組例外的基底類別"""


class MalformedEncoding(GraphError):
    """graph6 / planar_code 內容損毀；ordinal 指出第幾筆記錄"""

    def __init__(self, message: str, ordinal: Optional[int] = None):
        self.ordinal = ordinal
        if ordinal is not None:
            message = f"record {ordinal}: {message}"
        super().__init__(message)


class TruncatedStream(MalformedEncoding):
    """planar_code 串流在記錄中途結束"""


class PreconditionViolation(GraphError):
    """輸入不符合操作的前置條件"""


class NotCubic(PreconditionViolation):
    pass


class NonPlanar(PreconditionViolation):
    pass


class InvalidEmbedding(PreconditionViolation):
    """提供的 rotation system 與圖不符，或不是平面嵌入"""


class NoSuchFace(PreconditionViolation):
    pass


class NotHamiltonian(PreconditionViolation):
    pass


class NotTwoTriangle(PreconditionViolation):
    pass


class LoopPresent(PreconditionViolation):
    pass


class UniquenessViolation(PreconditionViolation):
    pass


class CollisionDetected(PreconditionViolation):
    pass


class Acyclic(GraphError):
    """圖中沒有任何環路"""


class TheoremViolation(GraphError):
    """保證存在的見證找不到：代表實作錯誤或反例"""


class BudgetExceeded(GraphError):
    """搜尋節點展開次數超過上限"""

    def __init__(self, limit: int):
        self.limit = limit
        super().__init__(f"search budget of {limit} expansions exceeded")


class UsageError(ValueError):
    """命令列參數或語料格式選擇錯誤；CLI 以結束碼 2 回報"""
