"""Module containing exact linear algebra over any field whose elements support + - * /"""
from typing import Any, List, Optional, Sequence, Tuple

Vector = List[Any]
Matrix = List[List[Any]]


def _zero_like(entry: Any) -> Any:
    return entry - entry


def _one_like(entry: Any) -> Any:
    return _zero_like(entry) + 1


def _first_entry(matrix: Sequence[Sequence[Any]]) -> Any:
    for row in matrix:
        for entry in row:
            return entry
    raise ValueError('matrix has no entries')


def identity_matrix(size: int, one: Any = 1) -> Matrix:
    """Returns the size x size identity matrix built from the given unit"""
    zero = _zero_like(one)
    return [[one if i == j else zero for j in range(size)] for i in range(size)]


def mat_mul(left: Sequence[Sequence[Any]], right: Sequence[Sequence[Any]]) -> Matrix:
    """Multiplies two matrices, skipping zero entries of the left factor"""
    if len(left[0]) != len(right):
        raise ValueError(f'cannot multiply {len(left)}x{len(left[0])} by {len(right)}x{len(right[0])}')

    zero = _zero_like(_first_entry(right))
    columns = len(right[0])
    product = []

    for row in left:
        out = [zero] * columns
        for k, entry in enumerate(row):
            if entry == 0:
                continue
            right_row = right[k]
            for j in range(columns):
                if right_row[j] != 0:
                    out[j] = out[j] + entry * right_row[j]
        product.append(out)

    return product


def mat_vec(matrix: Sequence[Sequence[Any]], vector: Sequence[Any]) -> Vector:
    """Returns matrix * vector"""
    zero = _zero_like(vector[0])
    result = []

    for row in matrix:
        total = zero
        for entry, value in zip(row, vector):
            if entry != 0 and value != 0:
                total = total + entry * value
        result.append(total)

    return result


def transpose(matrix: Sequence[Sequence[Any]]) -> Matrix:
    return [list(column) for column in zip(*matrix)]


def row_echelon(matrix: Sequence[Sequence[Any]], reduced: bool = True) -> Tuple[Matrix, List[int]]:
    """
    Gauss-Jordan elimination. Returns the (reduced) row echelon form and the pivot columns.
    Pivot rows are scaled to have a leading one when reduced is True
    """
    rows = [list(row) for row in matrix]
    if not rows:
        return rows, []

    row_count, column_count = len(rows), len(rows[0])
    pivots: List[int] = []
    pivot_row = 0

    for column in range(column_count):
        if pivot_row >= row_count:
            break

        chosen = next((r for r in range(pivot_row, row_count) if rows[r][column] != 0), None)
        if chosen is None:
            continue

        rows[pivot_row], rows[chosen] = rows[chosen], rows[pivot_row]
        pivot_value = rows[pivot_row][column]

        if reduced:
            inverse = 1 / pivot_value
            rows[pivot_row] = [entry * inverse for entry in rows[pivot_row]]
            pivot_value = rows[pivot_row][column]

        targets = range(row_count) if reduced else range(pivot_row + 1, row_count)
        for r in targets:
            if r == pivot_row or rows[r][column] == 0:
                continue
            factor = rows[r][column] / pivot_value
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[pivot_row])]

        pivots.append(column)
        pivot_row += 1

    return rows, pivots


def rank(matrix: Sequence[Sequence[Any]]) -> int:
    """Rank of the matrix"""
    _, pivots = row_echelon(matrix, reduced=False)
    return len(pivots)


def determinant(matrix: Sequence[Sequence[Any]]) -> Any:
    """Determinant of a square matrix by elimination over the field"""
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        raise ValueError('determinant needs a square matrix')

    rows = [list(row) for row in matrix]
    result = _one_like(_first_entry(rows))

    for column in range(size):
        chosen = next((r for r in range(column, size) if rows[r][column] != 0), None)
        if chosen is None:
            return _zero_like(result)

        if chosen != column:
            rows[column], rows[chosen] = rows[chosen], rows[column]
            result = -result

        pivot_value = rows[column][column]
        result = result * pivot_value

        for r in range(column + 1, size):
            if rows[r][column] == 0:
                continue
            factor = rows[r][column] / pivot_value
            rows[r] = [a - factor * b for a, b in zip(rows[r], rows[column])]

    return result


def nullspace(matrix: Sequence[Sequence[Any]], column_count: Optional[int] = None,
              zero: Any = None) -> List[Vector]:
    """Basis of {x : matrix * x = 0}, one vector per free column"""
    if not matrix:
        if column_count is None or zero is None:
            raise ValueError('column_count and zero are needed for an empty matrix')
        one = _one_like(zero)
        return [[one if i == j else zero for i in range(column_count)] for j in range(column_count)]

    echelon, pivots = row_echelon(matrix, reduced=True)
    width = len(echelon[0])
    zero = _zero_like(_first_entry(echelon))
    one = _one_like(zero)
    free_columns = [c for c in range(width) if c not in pivots]
    basis = []

    for free in free_columns:
        vector = [zero] * width
        vector[free] = one
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -echelon[row_index][free]
        basis.append(vector)

    return basis


def solve(matrix: Sequence[Sequence[Any]], rhs: Sequence[Any]) -> Optional[Vector]:
    """One solution of matrix * x = rhs, or None if the system is inconsistent"""
    augmented = [list(row) + [value] for row, value in zip(matrix, rhs)]
    echelon, pivots = row_echelon(augmented, reduced=True)
    width = len(matrix[0])

    if width in pivots:
        return None

    zero = _zero_like(rhs[0])
    solution = [zero] * width
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = echelon[row_index][width]

    return solution


def inverse_matrix(matrix: Sequence[Sequence[Any]]) -> Matrix:
    """Inverse of a square invertible matrix"""
    size = len(matrix)
    one = _one_like(_first_entry(matrix))
    augmented = [list(row) + identity_matrix(size, one)[i] for i, row in enumerate(matrix)]
    echelon, pivots = row_echelon(augmented, reduced=True)

    if pivots[:size] != list(range(size)):
        raise ZeroDivisionError('matrix is singular')

    return [row[size:] for row in echelon[:size]]
