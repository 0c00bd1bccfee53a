#include "newtrace/tables.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "newtrace/arith.hpp"
#include "newtrace/dimension.hpp"
#include "newtrace/eigensplit.hpp"
#include "newtrace/hecke_trace.hpp"
#include "newtrace/rational.hpp"

namespace newtrace {

namespace {

using Json = nlohmann::ordered_json;

struct TableRow {
    std::int64_t level = 0;
    std::int64_t hecke = 0;         // 0 when not applicable
    std::int64_t sign_divisor = 0;  // 0 when not applicable
    std::vector<std::string> values;
};

struct Table {
    std::string name;
    bool has_hecke = false;
    bool has_sign_divisor = false;
    std::vector<TableRow> rows;
};

std::string cell(const Rat& v) { return rat_to_string(v); }

Table build_table(const TableOptions& opt) {
    Table table;
    switch (opt.which) {
        case TableKind::Dims: {
            table.name = "dims";
            for (std::int64_t N = 1; N <= opt.max_level; ++N) {
                TableRow row{N, 0, 0, {}};
                for (int k : opt.weights) {
                    row.values.push_back(std::to_string(dim_newform(k, N)));
                }
                table.rows.push_back(std::move(row));
            }
            break;
        }
        case TableKind::Trace2:
        case TableKind::Trace3: {
            const std::int64_t l = opt.which == TableKind::Trace2 ? 2 : 3;
            table.name = l == 2 ? "trace2" : "trace3";
            table.has_hecke = true;
            for (std::int64_t N = 1; N <= opt.max_level; ++N) {
                if (N % (l * l) == 0) continue;  // the trace vanishes by fiat
                TableRow row{N, l, 0, {}};
                for (int k : opt.weights) {
                    row.values.push_back(cell(trace_newform(k, N, l)));
                }
                table.rows.push_back(std::move(row));
            }
            break;
        }
        case TableKind::TraceL: {
            table.name = "traceL";
            table.has_hecke = true;
            for (std::int64_t l = 5; l <= opt.max_level; ++l) {
                if (!factor(l).is_squarefree()) continue;
                for (std::int64_t N = 1; N <= opt.max_level; ++N) {
                    const std::int64_t g = std::gcd(l, N);
                    if (std::gcd(l, N / g) != 1) continue;
                    if (g * g <= 4 * l) continue;
                    TableRow row{N, l, 0, {}};
                    for (int k : opt.weights) {
                        row.values.push_back(cell(trace_newform(k, N, l)));
                    }
                    table.rows.push_back(std::move(row));
                }
            }
            break;
        }
        case TableKind::DTables: {
            table.name = "dtables";
            table.has_sign_divisor = true;
            for (std::int64_t N = 1; N <= opt.max_level; ++N) {
                for (std::int64_t i : nstar(factor(N)).divisors()) {
                    TableRow row{N, 0, i, {}};
                    for (int k : opt.weights) {
                        row.values.push_back(std::to_string(d_table(k, N, i)));
                    }
                    table.rows.push_back(std::move(row));
                }
            }
            break;
        }
    }
    return table;
}

std::vector<std::string> header_columns(const Table& table,
                                        const TableOptions& opt) {
    std::vector<std::string> cols;
    cols.push_back("level");
    if (table.has_hecke) cols.push_back("hecke");
    if (table.has_sign_divisor) cols.push_back("sign_divisor");
    for (int k : opt.weights) cols.push_back("k=" + std::to_string(k));
    return cols;
}

std::vector<std::string> row_columns(const Table& table, const TableRow& row) {
    std::vector<std::string> cols;
    cols.push_back(std::to_string(row.level));
    if (table.has_hecke) cols.push_back(std::to_string(row.hecke));
    if (table.has_sign_divisor) cols.push_back(std::to_string(row.sign_divisor));
    for (const auto& v : row.values) cols.push_back(v);
    return cols;
}

std::string render_text(const Table& table, const TableOptions& opt) {
    const auto header = header_columns(table, opt);
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : table.rows) {
        const auto cols = row_columns(table, row);
        for (std::size_t c = 0; c < cols.size(); ++c) {
            width[c] = std::max(width[c], cols[c].size());
        }
    }
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cols) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c > 0) out << "  ";
            out << std::setw(int(width[c])) << cols[c];
        }
        out << "\n";
    };
    emit(header);
    for (const auto& row : table.rows) emit(row_columns(table, row));
    return out.str();
}

std::string render_csv(const Table& table, const TableOptions& opt) {
    std::ostringstream out;
    auto emit = [&](const std::vector<std::string>& cols) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (c > 0) out << ",";
            out << cols[c];  // cells are integers and labels; no quoting needed
        }
        out << "\r\n";
    };
    emit(header_columns(table, opt));
    for (const auto& row : table.rows) emit(row_columns(table, row));
    return out.str();
}

std::string render_json(const Table& table, const TableOptions& opt) {
    Json doc;
    doc["table"] = table.name;
    doc["max_level"] = opt.max_level;
    doc["weights"] = opt.weights;
    Json rows = Json::array();
    for (const auto& row : table.rows) {
        Json r;
        r["level"] = row.level;
        if (table.has_hecke) r["hecke"] = row.hecke;
        if (table.has_sign_divisor) r["sign_divisor"] = row.sign_divisor;
        Json values;
        for (std::size_t c = 0; c < opt.weights.size(); ++c) {
            values[std::to_string(opt.weights[c])] = row.values[c];
        }
        r["values"] = std::move(values);
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace

std::string generate_table(const TableOptions& options) {
    if (options.max_level < 1) {
        throw std::invalid_argument("table: max-level must be >= 1");
    }
    if (options.weights.empty()) {
        throw std::invalid_argument("table: at least one weight is required");
    }
    for (int k : options.weights) {
        if (k < 2 || k % 2 != 0) {
            throw std::invalid_argument("table: weights must be even and >= 2");
        }
    }
    const Table table = build_table(options);
    switch (options.format) {
        case TableFormat::Text: return render_text(table, options);
        case TableFormat::Csv: return render_csv(table, options);
        case TableFormat::Json: return render_json(table, options);
    }
    throw std::logic_error("table: unknown format");
}

}  // namespace newtrace
