#include <doctest.h>

#include <nlohmann/json.hpp>

#include "newtrace/dimension.hpp"
#include "newtrace/eigensplit.hpp"
#include "newtrace/hecke_trace.hpp"
#include "newtrace/tables.hpp"

using namespace newtrace;

namespace {

TableOptions options(TableKind which, TableFormat format, int max_level = 20,
                     std::vector<int> weights = {2, 4, 12}) {
    TableOptions opt;
    opt.which = which;
    opt.max_level = max_level;
    opt.weights = std::move(weights);
    opt.format = format;
    return opt;
}

}  // namespace

TEST_CASE("identical invocations render byte-identical output") {
    for (TableKind kind : {TableKind::Dims, TableKind::Trace2, TableKind::TraceL,
                           TableKind::DTables}) {
        for (TableFormat format :
             {TableFormat::Text, TableFormat::Csv, TableFormat::Json}) {
            const TableOptions opt = options(kind, format);
            CHECK(generate_table(opt) == generate_table(opt));
        }
    }
}

TEST_CASE("csv headers carry the row and column labels") {
    const std::string dims = generate_table(options(TableKind::Dims, TableFormat::Csv));
    CHECK(dims.substr(0, dims.find("\r\n")) == "level,k=2,k=4,k=12");
    const std::string d = generate_table(options(TableKind::DTables, TableFormat::Csv));
    CHECK(d.substr(0, d.find("\r\n")) == "level,sign_divisor,k=2,k=4,k=12");
    const std::string t = generate_table(options(TableKind::Trace2, TableFormat::Csv));
    CHECK(t.substr(0, t.find("\r\n")) == "level,hecke,k=2,k=4,k=12");
}

TEST_CASE("json tables round-trip through the library") {
    for (TableKind kind : {TableKind::Dims, TableKind::Trace2, TableKind::Trace3,
                           TableKind::TraceL, TableKind::DTables}) {
        const TableOptions opt = options(kind, TableFormat::Json);
        const std::string rendered = generate_table(opt);
        const auto doc = nlohmann::json::parse(rendered);

        CHECK(doc.at("max_level") == opt.max_level);
        for (const auto& row : doc.at("rows")) {
            const std::int64_t N = row.at("level").get<std::int64_t>();
            for (int k : opt.weights) {
                const std::string got =
                    row.at("values").at(std::to_string(k)).get<std::string>();
                Rat expected;
                switch (kind) {
                    case TableKind::Dims:
                        expected = dim_newform(k, N);
                        break;
                    case TableKind::Trace2:
                    case TableKind::Trace3:
                    case TableKind::TraceL:
                        expected = trace_newform(
                            k, N, row.at("hecke").get<std::int64_t>());
                        break;
                    case TableKind::DTables:
                        expected = d_table(
                            k, N, row.at("sign_divisor").get<std::int64_t>());
                        break;
                }
                CHECK(got == rat_to_string(expected));
            }
        }
    }
}

TEST_CASE("input validation") {
    TableOptions opt = options(TableKind::Dims, TableFormat::Text);
    opt.weights = {3};
    CHECK_THROWS_AS(generate_table(opt), std::invalid_argument);
    opt.weights.clear();
    CHECK_THROWS_AS(generate_table(opt), std::invalid_argument);
    opt.weights = {2};
    opt.max_level = 0;
    CHECK_THROWS_AS(generate_table(opt), std::invalid_argument);
}
