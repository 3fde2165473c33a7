#include "hsnum/records.hpp"

#include <stdexcept>

#include "json.hpp"

namespace hsnum {

using ojson = nlohmann::ordered_json;

std::string_view to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Md:
      return "md";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  for (Format f : {Format::Json, Format::Csv, Format::Md}) {
    if (name == to_string(f)) {
      return f;
    }
  }
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::Empty:
      return "empty";
    case Status::Unbendable:
      return "unbendable";
    case Status::Degenerate:
      return "degenerate";
    case Status::CapExceeded:
      return "cap_exceeded";
  }
  return "?";
}

OutputRecord make_record(SeveriTriple const& t,
                         HurwitzProvider const& provider) {
  OutputRecord rec{t, classify(t), node_count(t), dims(t), {}, {}, Status::Ok,
                   {}};
  try {
    HSValue v    = hs_number(t, provider);
    rec.hurwitz  = v.hurwitz_input.value;
    rec.hs       = v.value;
    rec.warnings = std::move(v.warnings);
  } catch (EmptyVariety const&) {
    rec.status = Status::Empty;
  } catch (UnbendableUnsupported const&) {
    rec.status = Status::Unbendable;
  } catch (DegenerateProjection const&) {
    rec.status = Status::Degenerate;
  } catch (CapExceeded const& e) {
    rec.status = Status::CapExceeded;
    rec.warnings.emplace_back(e.what());
  }
  return rec;
}

namespace {

ojson rational_json(Rational const& q) {
  return ojson{{"num", boost::multiprecision::numerator(q).str()},
               {"den", boost::multiprecision::denominator(q).str()}};
}

ojson record_json(OutputRecord const& r) {
  ojson j;
  j["g"]                 = r.triple.g;
  j["d"]                 = r.triple.d;
  j["l"]                 = r.triple.l;
  j["kind"]              = to_string(r.classification.kind);
  j["strongly_bendable"] = r.classification.strongly_bendable;
  j["nonempty"]          = r.classification.nonempty;
  j["nodes"]             = r.node_count;
  j["dims"]              = ojson{{"W", r.dims.dim_W},
                                 {"W_tilde", r.dims.dim_W_tilde},
                                 {"P", r.dims.dim_P}};
  j["hurwitz"] = r.hurwitz ? ojson(r.hurwitz->str()) : ojson(nullptr);
  j["hs"]      = r.hs ? rational_json(*r.hs) : ojson(nullptr);
  j["status"]  = to_string(r.status);
  j["warnings"] = r.warnings;
  return j;
}

std::string csv_field(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string joined(std::vector<std::string> const& items,
                   std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) {
      out += sep;
    }
    out += items[i];
  }
  return out;
}

std::string_view yes_no(bool b) {
  return b ? "true" : "false";
}

}  // namespace

std::string csv_header() {
  return "g,d,l,kind,strongly,nonempty,nodes,dimW,dimWt,dimP,h,hs_num,hs_den,"
         "status,warnings";
}

void write_records(std::ostream& out, std::vector<OutputRecord> const& records,
                   Format format, bool as_array) {
  switch (format) {
    case Format::Json: {
      if (as_array) {
        ojson arr = ojson::array();
        for (auto const& r : records) {
          arr.push_back(record_json(r));
        }
        out << arr.dump(2) << '\n';
      } else {
        for (auto const& r : records) {
          out << record_json(r).dump(2) << '\n';
        }
      }
      break;
    }
    case Format::Csv: {
      out << csv_header() << '\n';
      for (auto const& r : records) {
        out << r.triple.g << ',' << r.triple.d << ',' << r.triple.l << ','
            << to_string(r.classification.kind) << ','
            << yes_no(r.classification.strongly_bendable) << ','
            << yes_no(r.classification.nonempty) << ',' << r.node_count << ','
            << r.dims.dim_W << ',' << r.dims.dim_W_tilde << ','
            << r.dims.dim_P << ',' << (r.hurwitz ? r.hurwitz->str() : "")
            << ','
            << (r.hs ? boost::multiprecision::numerator(*r.hs).str() : "")
            << ','
            << (r.hs ? boost::multiprecision::denominator(*r.hs).str() : "")
            << ',' << to_string(r.status) << ','
            << csv_field(joined(r.warnings, "; ")) << '\n';
      }
      break;
    }
    case Format::Md: {
      out << "| g | d | l | kind | nonempty | nodes | dim W | dim W~ | dim P "
             "| h | HS | status | warnings |\n"
          << "|---|---|---|---|---|---|---|---|---|---|---|---|---|\n";
      for (auto const& r : records) {
        out << "| " << r.triple.g << " | " << r.triple.d << " | " << r.triple.l
            << " | " << kind_label(r.classification) << " | "
            << yes_no(r.classification.nonempty) << " | " << r.node_count
            << " | " << r.dims.dim_W << " | " << r.dims.dim_W_tilde << " | "
            << r.dims.dim_P << " | " << (r.hurwitz ? r.hurwitz->str() : "-")
            << " | " << (r.hs ? to_string(*r.hs) : "-") << " | "
            << to_string(r.status) << " | " << joined(r.warnings, "; ")
            << " |\n";
      }
      break;
    }
  }
}

void write_hurwitz(std::ostream& out, HurwitzRecord const& rec, Format format) {
  switch (format) {
    case Format::Json: {
      ojson j;
      j["g"]     = rec.genus;
      j["d"]     = rec.degree;
      j["r"]     = rec.transpositions;
      j["h"]     = rec.h.str();
      j["pairs"] = rational_json(rec.pairs);
      ojson engines = ojson::array();
      for (auto const& e : rec.engines) {
        engines.push_back(
            ojson{{"method", to_string(e.method)}, {"h", e.value.str()}});
      }
      j["engines"] = std::move(engines);
      j["agree"]   = rec.agree;
      out << j.dump(2) << '\n';
      break;
    }
    case Format::Csv: {
      out << "g,d,r,method,h,pairs_num,pairs_den\n";
      for (auto const& e : rec.engines) {
        Rational const pairs(e.value,
                             factorial(static_cast<unsigned>(rec.degree)));
        out << rec.genus << ',' << rec.degree << ',' << rec.transpositions
            << ',' << to_string(e.method) << ',' << e.value.str() << ','
            << boost::multiprecision::numerator(pairs).str() << ','
            << boost::multiprecision::denominator(pairs).str() << '\n';
      }
      break;
    }
    case Format::Md: {
      out << "| g | d | r | method | h | h/d! |\n"
          << "|---|---|---|---|---|---|\n";
      for (auto const& e : rec.engines) {
        Rational const pairs(e.value,
                             factorial(static_cast<unsigned>(rec.degree)));
        out << "| " << rec.genus << " | " << rec.degree << " | "
            << rec.transpositions << " | " << to_string(e.method) << " | "
            << e.value.str() << " | " << to_string(pairs) << " |\n";
      }
      out << "\nh = " << rec.h.str() << ", h/d! = " << to_string(rec.pairs)
          << ", engines " << (rec.agree ? "agree" : "DISAGREE") << '\n';
      break;
    }
  }
}

}  // namespace hsnum
