#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "optbench/pricing/types.hpp"

namespace optbench {

/// All contracts on one underlying. Nonempty, unique ids.
struct ContractBook {
  std::vector<OptionContract> contracts;

  std::size_t size() const noexcept { return contracts.size(); }
  void validate() const;
};

/// CSV with header `id,kind,strike,expiry_years`.
ContractBook read_book(std::istream& in);
ContractBook read_book(const std::filesystem::path& path);
void write_book(std::ostream& out, const ContractBook& book);
void write_book(const std::filesystem::path& path, const ContractBook& book);

struct BookSpec {
  std::size_t size = 617;
  double strike_low = 40.0;
  double strike_high = 100.0;
  double strike_step = 2.5;
  std::vector<double> expiries{0.25, 0.5, 1.0};
};

/// Cycles strike grid x expiries x {call, put} until `size` contracts exist.
ContractBook generate_book(const BookSpec& spec);

/// Static partition: contracts[k] lists the book indices owned by worker k,
/// in book order. Loads differ by at most one; extra workers stay idle.
struct WorkerAssignment {
  std::vector<std::vector<std::size_t>> contracts;
};

WorkerAssignment partition_book(const ContractBook& book, std::size_t workers);

}  // namespace optbench
