#ifndef BELYI_JSON_IO_HPP
#define BELYI_JSON_IO_HPP

#include <string>

#include "belyi/dessin.hpp"

namespace belyi {

/* Dessin file format: a JSON object
 *   {"degree": d, "sigma0": [[...cycles...]], "sigma1": [[...]], "name": "..."}
 * with 1-based labels; labels omitted from the cycles are fixed points.
 */
Dessin dessin_from_json(const std::string& text);
Dessin load_dessin(const std::string& path);
std::string dessin_to_json(const Dessin& D);

}  // namespace belyi

#endif
