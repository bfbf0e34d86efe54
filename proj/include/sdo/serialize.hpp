#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "sdo/oracle.hpp"

namespace sdo {

class OracleFormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Little-endian binary dump of the whole node tree, starting with the magic
// "SDO1ORCL" and a format version. Lookup fields that can be recomputed are
// rebuilt on load, so save(load(save(t))) == save(t) byte for byte.
void save_oracle(std::ostream& out, const OracleTree& tree);
OracleTree load_oracle(std::istream& in);

std::string serialize_oracle(const OracleTree& tree);
OracleTree deserialize_oracle(const std::string& bytes);

void save_oracle_file(const std::string& path, const OracleTree& tree);
OracleTree load_oracle_file(const std::string& path);

// True when the file starts with the oracle magic.
bool is_oracle_file(const std::string& path);

}  // namespace sdo
