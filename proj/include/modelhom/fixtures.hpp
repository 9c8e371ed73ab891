#pragma once

#include "modelhom/equivalence.hpp"
#include "modelhom/model_io.hpp"

#include <string>
#include <vector>

namespace modelhom {

/// lotka_volterra, ordered_sequential, random_sequential, ping_pong,
/// pi4_annihilation, tp1_activator_inhibitor.
std::vector<std::string> fixture_names();

/// Throws InputError for unknown names.
ModelDocument fixture_document(const std::string& name);
LabelledComplex load_fixture(const std::string& name);

UniversePtr lotka_volterra_universe();
UniversePtr bisubstrate_universe();
/// 43 ordered morphogen-model components; positions not named in the
/// source material carry "Component <i>" placeholders.
UniversePtr turing_pi_universe();

ConceptDeclaration turing_pi_declaration();
ConceptDeclaration bisubstrate_declaration();

/// Scripts: tp1_to_pi4, pi4_to_tp1, ordered_to_random, random_to_ordered.
std::vector<std::string> script_names();
std::vector<EquivalenceOp> fixture_script(const std::string& name);

/// Writes models/, universes/, declarations/ and scripts/ under `dir`.
/// Returns the paths written, relative to `dir`.
std::vector<std::string> export_fixtures(const std::string& dir);

}  // namespace modelhom
