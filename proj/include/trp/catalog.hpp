#pragma once

#include <string>
#include <vector>

#include "trp/form.hpp"

namespace trp {

struct CatalogEntry {
    std::string name;
    std::string note;
    TernaryForm form;
};

/// The shipped fixture curves, each an explicit perturbation with its construction recorded.
const std::vector<CatalogEntry>& catalog();
/// Throws DomainError for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

}  // namespace trp
