#include "eitprop/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace eitprop {

namespace {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

std::string format_table(const Table& table) {
    std::string out;
    out += "# " + table.name + "\n";
    for (const auto& c : table.comments) out += "# " + c + "\n";
    out += "#";
    for (const auto& col : table.columns) out += "\t" + col;
    out += "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += "\t";
            out += format_value(row[i]);
        }
        out += "\n";
    }
    return out;
}

void write_table(const Table& table, const std::string& directory) {
    const std::string path = directory + "/" + table.name + ".tsv";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << format_table(table);
}

void write_plot_script(const Table& table, const std::string& directory,
                       const std::string& ylabel,
                       const std::vector<int>& y_columns) {
    const std::string path = directory + "/" + table.name + ".gp";
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << "set datafile separator '\\t'\n";
    out << "set xlabel '" << table.columns.front() << "'\n";
    out << "set ylabel '" << ylabel << "'\n";
    out << "set grid\n";
    out << "plot ";
    bool first = true;
    for (int col : y_columns) {
        if (!first) out << ", \\\n     ";
        out << "'" << table.name << ".tsv' using 1:" << col << " with lines "
            << "title '" << table.columns[col - 1] << "'";
        first = false;
    }
    out << "\n";
}

}  // namespace eitprop
