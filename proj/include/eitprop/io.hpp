#ifndef EITPROP_IO_HPP
#define EITPROP_IO_HPP

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace eitprop {

// Tab-separated table with one '#' header line naming columns and units.
// Formatting is fixed so identical inputs give byte-identical files.
struct Table {
    std::string name;                       // file stem
    std::vector<std::string> comments;      // extra '#' lines
    std::vector<std::string> columns;       // header entries
    std::vector<std::vector<double>> rows;  // NaN prints as "nan"
};

std::string format_table(const Table& table);
void write_table(const Table& table, const std::string& directory);

// Companion gnuplot script plotting the named columns of a written table.
void write_plot_script(const Table& table, const std::string& directory,
                       const std::string& ylabel,
                       const std::vector<int>& y_columns);

}  // namespace eitprop

#endif
