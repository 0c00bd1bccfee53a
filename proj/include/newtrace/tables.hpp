#pragma once

#include <string>
#include <vector>

namespace newtrace {

enum class TableKind { Dims, Trace2, Trace3, TraceL, DTables };
enum class TableFormat { Text, Csv, Json };

struct TableOptions {
    TableKind which = TableKind::Dims;
    int max_level = 42;
    std::vector<int> weights;  // even weights, ascending
    TableFormat format = TableFormat::Text;
};

// Deterministic, byte-stable rendering of the requested table:
//   dims:    dim S^0_k(N) for N = 1..max_level
//   trace2:  tr(T(2) | S^0_k(N)) for N with 4 not | N
//   trace3:  tr(T(3) | S^0_k(N)) for N with 9 not | N
//   traceL:  tr(T(l) | S^0_k(N)) over 5 <= l <= max_level squarefree,
//            N <= max_level with (l, N/(l,N)) = 1 and (l,N) > 2 sqrt(l)
//   dtables: d_k(N; i) over i | nstar(N)
// All cell values are exact integers; JSON carries them as decimal strings
// (see README for the schema).
std::string generate_table(const TableOptions& options);

}  // namespace newtrace
