// JSON descriptors for models, rings, modules and reports.  Readers reject
// unknown keys and report the JSON path of the offending value.

#ifndef PICRING_JSON_IO_HPP_
#define PICRING_JSON_IO_HPP_

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "amodules.hpp"
#include "enriched.hpp"
#include "models.hpp"
#include "report.hpp"
#include "tworing.hpp"

namespace picring {

  using nlohmann::json;

  class input_error : public std::runtime_error {
   public:
    input_error(std::string path, std::string const& msg)
        : std::runtime_error(path + ": " + msg), path(std::move(path)) {}
    std::string path;
  };

  // Parses text; syntax errors carry line and column.
  json parse_json(std::string const& text, std::string const& origin);
  json load_json(std::string const& file);

  FinAbGroup   read_group(json const& j, std::string const& path);
  Elem         read_elem(json const& j, FinAbGroup const& g,
                         std::string const& path);
  GroupHom     read_hom(json const& j, FinAbGroup const& src,
                        FinAbGroup const& dst, std::string const& path);
  PicardModel  read_picard(json const& j, std::string const& path);
  FiniteRing   read_ring(json const& j, std::string const& path);
  TwoRingModel read_two_ring(json const& j, std::string const& path,
                             FiniteRing* ring = nullptr);
  TwoRingMorphism read_two_ring_morphism(json const& j, TwoRingModel& A,
                                         TwoRingModel&      B,
                                         std::string const& path);
  EnrichedCategory read_enriched(json const& j, std::string const& path);
  ModuleModel      read_module(json const& j, std::string const& path);

  json elem_json(Elem const& x);
  json picard_json(PicardModel const& m);

  json   report_json(Report const& r);
  Report report_from_json(json const& j);

}  // namespace picring

#endif  // PICRING_JSON_IO_HPP_
