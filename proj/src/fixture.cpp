#include "relq/fixture.hpp"

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "relq/io.hpp"
#include "relq/kb.hpp"
#include "relq/locale.hpp"
#include "relq/stats.hpp"
#include "relq/util.hpp"

namespace relq {

namespace {

using json = nlohmann::json;

const std::array<std::string, 5> kLangs = {"en", "de", "es", "fr", "it"};

struct Labels {
  const char* en;
  const char* de;
  const char* es;
  const char* fr;
  const char* it;

  std::string get(const std::string& lang) const {
    if (lang == "en") return en;
    if (lang == "de") return de;
    if (lang == "es") return es;
    if (lang == "fr") return fr;
    return it;
  }
};

struct CountrySpec {
  const char* qid;
  Labels labels;
  const char* capital_qid;
  // French and Italian need article/genitive/locative forms of the name.
  const char* fr_subject;   // "Le Brésil"
  const char* fr_genitive;  // "du Brésil"
  const char* fr_locative;  // "au Brésil"
  const char* it_subject;   // "Il Brasile"
  const char* it_genitive;  // "del Brasile"
  const char* it_locative;  // "in Brasile"
};

const std::vector<CountrySpec> kCountries = {
    {"Q155", {"Brazil", "Brasilien", "Brasil", "Brésil", "Brasile"}, "Q2844",
     "Le Brésil", "du Brésil", "au Brésil", "Il Brasile", "del Brasile", "in Brasile"},
    {"Q419", {"Peru", "Peru", "Perú", "Pérou", "Perù"}, "Q2868",
     "Le Pérou", "du Pérou", "au Pérou", "Il Perù", "del Perù", "in Perù"},
    {"Q739", {"Colombia", "Kolumbien", "Colombia", "Colombie", "Colombia"}, "Q2841",
     "La Colombie", "de la Colombie", "en Colombie", "La Colombia", "della Colombia",
     "in Colombia"},
    {"Q717", {"Venezuela", "Venezuela", "Venezuela", "Venezuela", "Venezuela"}, "Q1533",
     "Le Venezuela", "du Venezuela", "au Venezuela", "Il Venezuela", "del Venezuela",
     "in Venezuela"},
    {"Q38", {"Italy", "Italien", "Italia", "Italie", "Italia"}, "Q220",
     "L'Italie", "de l'Italie", "en Italie", "L'Italia", "dell'Italia", "in Italia"},
    {"Q142", {"France", "Frankreich", "Francia", "France", "Francia"}, "Q90",
     "La France", "de la France", "en France", "La Francia", "della Francia", "in Francia"},
    {"Q183", {"Germany", "Deutschland", "Alemania", "Allemagne", "Germania"}, "Q64",
     "L'Allemagne", "de l'Allemagne", "en Allemagne", "La Germania", "della Germania",
     "in Germania"},
    {"Q29", {"Spain", "Spanien", "España", "Espagne", "Spagna"}, "Q2807",
     "L'Espagne", "de l'Espagne", "en Espagne", "La Spagna", "della Spagna", "in Spagna"},
};

struct CitySpec {
  const char* qid;
  Labels labels;
  const char* country_qid;
};

const std::vector<CitySpec> kCities = {
    {"Q2844", {"Brasília", "Brasília", "Brasilia", "Brasília", "Brasilia"}, "Q155"},
    {"Q2868", {"Lima", "Lima", "Lima", "Lima", "Lima"}, "Q419"},
    {"Q2841", {"Bogotá", "Bogotá", "Bogotá", "Bogota", "Bogotá"}, "Q739"},
    {"Q1533", {"Caracas", "Caracas", "Caracas", "Caracas", "Caracas"}, "Q717"},
    {"Q220", {"Rome", "Rom", "Roma", "Rome", "Roma"}, "Q38"},
    {"Q90", {"Paris", "Paris", "París", "Paris", "Parigi"}, "Q142"},
    {"Q64", {"Berlin", "Berlin", "Berlín", "Berlin", "Berlino"}, "Q183"},
    {"Q2807", {"Madrid", "Madrid", "Madrid", "Madrid", "Madrid"}, "Q29"},
    {"Q2044", {"Florence", "Florenz", "Florencia", "Florence", "Firenze"}, "Q38"},
    {"Q1055", {"Hamburg", "Hamburg", "Hamburgo", "Hambourg", "Amburgo"}, "Q183"},
    {"Q456", {"Lyon", "Lyon", "Lyon", "Lyon", "Lione"}, "Q142"},
    {"Q8717", {"Seville", "Sevilla", "Sevilla", "Séville", "Siviglia"}, "Q29"},
};

enum class PersonGender {
  Male,         // explicit P21
  Female,       // explicit P21
  PronounMale,  // no P21; page pronouns decide
  PronounFemale,
  None,  // no P21, no pronouns
};

struct PersonSpec {
  const char* qid;
  const char* name;  // same surface in every language
  PersonGender gender;
  const char* city_qid;
  const char* country_qid;
  int year;
  int month;  // 0 when below month precision
  int day;    // 0 when below day precision
  bool has_pages = true;
  bool only_en_de = false;  // labels (and pages) restricted to en/de
};

const std::vector<PersonSpec> kPeople = {
    {"Q910001", "Ada Sorel", PersonGender::Female, "Q90", "Q142", 1952, 3, 11},
    {"Q910002", "Bruno Keller", PersonGender::Male, "Q64", "Q183", 1947, 11, 2},
    {"Q910003", "Clara Voss", PersonGender::Female, "Q1055", "Q183", 1968, 7, 23},
    {"Q910004", "David Romero", PersonGender::Male, "Q2807", "Q29", 1975, 1, 30},
    {"Q910005", "Elena Marchetti", PersonGender::Female, "Q220", "Q38", 1981, 9, 14},
    {"Q910006", "Felix Arnaud", PersonGender::Male, "Q456", "Q142", 1939, 5, 25},
    {"Q910007", "Greta Lindt", PersonGender::PronounFemale, "Q1055", "Q183", 1871, 5, 0},
    {"Q910008", "Hugo Bellini", PersonGender::PronounMale, "Q220", "Q38", 1903, 0, 0},
    {"Q910009", "Irene Castillo", PersonGender::Female, "Q8717", "Q29", 1990, 12, 5},
    {"Q910010", "Jonas Weber", PersonGender::Male, "Q64", "Q183", 1958, 4, 18},
    {"Q910011", "Karla Mendes", PersonGender::Female, "Q2844", "Q155", 1973, 6, 9},
    {"Q910012", "Liam Fournier", PersonGender::Male, "Q90", "Q142", 1985, 2, 27},
    {"Q910013", "Marta Greco", PersonGender::Female, "Q220", "Q38", 1962, 10, 3},
    {"Q910014", "Nils Ostermann", PersonGender::None, "Q64", "Q183", 1944, 0, 0},
    {"Q910015", "Olivia Serrano", PersonGender::Female, "Q2807", "Q29", 1979, 8, 21},
    {"Q910016", "Pablo Herrera", PersonGender::Male, "Q8717", "Q29", 1966, 3, 15},
    {"Q910017", "Quentin Maraval", PersonGender::Male, "Q456", "Q142", 1931, 7, 7},
    {"Q910018", "Rosa Lemoine", PersonGender::Female, "Q90", "Q142", 1955, 5, 5, true, true},
    {"Q910019", "Tomas Brandt", PersonGender::Male, "Q64", "Q183", 1950, 1, 1, false},
    {"Q1067", "Dante Alighieri", PersonGender::Male, "Q2044", "Q38", 1265, 0, 0},
};

struct BookSpec {
  const char* qid;
  Labels titles;
  const char* author_qid;
  const char* author_name;
  bool title_in_author_sentence = true;  // false: author mentioned without the title
};

const std::vector<BookSpec> kBooks = {
    {"Q40185",
     {"Divine Comedy", "Göttliche Komödie", "Divina comedia", "Divine Comédie",
      "Divina Commedia"},
     "Q1067", "Dante Alighieri"},
    {"Q920001", {"Palimpsest", "Palimpsest", "Palimpsest", "Palimpsest", "Palimpsest"},
     "Q910001", "Ada Sorel"},
    {"Q920002",
     {"Meridian House", "Meridian House", "Meridian House", "Meridian House", "Meridian House"},
     "Q910002", "Bruno Keller"},
    {"Q920003", {"Vestigia", "Vestigia", "Vestigia", "Vestigia", "Vestigia"}, "Q910005",
     "Elena Marchetti"},
    {"Q920004",
     {"Cobalt Harbor", "Cobalt Harbor", "Cobalt Harbor", "Cobalt Harbor", "Cobalt Harbor"},
     "Q910003", "Clara Voss"},
    {"Q920005", {"Iron Delta", "Iron Delta", "Iron Delta", "Iron Delta", "Iron Delta"},
     "Q910004", "David Romero"},
    {"Q920006", {"Quiet Ascent", "Quiet Ascent", "Quiet Ascent", "Quiet Ascent", "Quiet Ascent"},
     "Q910006", "Felix Arnaud"},
    {"Q920007", {"Red Estuary", "Red Estuary", "Red Estuary", "Red Estuary", "Red Estuary"},
     "Q910009", "Irene Castillo"},
    {"Q920008",
     {"Amber Causeway", "Amber Causeway", "Amber Causeway", "Amber Causeway", "Amber Causeway"},
     "Q910018", "Rosa Lemoine"},
    {"Q920009", {"Winter Ledger", "Winter Ledger", "Winter Ledger", "Winter Ledger",
                 "Winter Ledger"},
     "Q910008", "Hugo Bellini", false},
};

json entity_json(const std::string& qid, const std::map<std::string, std::string>& labels,
                 const std::map<std::string, std::vector<std::string>>& aliases,
                 const json& statements) {
  json j;
  j["qid"] = qid;
  j["labels"] = labels;
  if (!aliases.empty()) j["aliases"] = aliases;
  j["statements"] = statements;
  return j;
}

json entity_stmt(const std::string& pid, const std::string& qid) {
  return json{{"pid", pid}, {"type", "entity"}, {"value", qid}};
}

json time_stmt(const std::string& pid, const PersonSpec& p) {
  TimeValue t;
  t.year = p.year;
  t.month = p.month;
  t.day = p.day;
  t.precision = p.day > 0   ? TimePrecision::Day
                : p.month > 0 ? TimePrecision::Month
                              : TimePrecision::Year;
  const char* prec = t.precision == TimePrecision::Day     ? "day"
                     : t.precision == TimePrecision::Month ? "month"
                                                           : "year";
  return json{{"pid", pid},
              {"type", "time"},
              {"value", json{{"date", t.iso()}, {"precision", prec}}}};
}

json quantity_stmt(const std::string& pid, double amount, const std::string& unit) {
  return json{{"pid", pid},
              {"type", "quantity"},
              {"value", json{{"amount", amount}, {"unit", unit}}}};
}

std::map<std::string, std::string> all_labels(const Labels& l) {
  std::map<std::string, std::string> out;
  for (const auto& lang : kLangs) out[lang] = l.get(lang);
  return out;
}

TimeValue time_of(const PersonSpec& p) {
  TimeValue t;
  t.year = p.year;
  t.month = p.month;
  t.day = p.day;
  t.precision = p.day > 0   ? TimePrecision::Day
                : p.month > 0 ? TimePrecision::Month
                              : TimePrecision::Year;
  return t;
}

bool female_text(PersonGender g) {
  return g == PersonGender::Female || g == PersonGender::PronounFemale;
}

const CountrySpec& country_by_qid(const std::string& qid) {
  for (const auto& c : kCountries) {
    if (qid == c.qid) return c;
  }
  throw FatalError("fixture", "unknown country qid: " + qid);
}

const CitySpec& city_by_qid(const std::string& qid) {
  for (const auto& c : kCities) {
    if (qid == c.qid) return c;
  }
  throw FatalError("fixture", "unknown city qid: " + qid);
}

std::string person_page_text(const PersonSpec& p, const std::string& lang,
                             const LocaleTable& locale) {
  const CitySpec& city = city_by_qid(p.city_qid);
  const CountrySpec& country = country_by_qid(p.country_qid);
  std::string name = p.name;
  std::string city_name = city.labels.get(lang);
  std::string country_name = country.labels.get(lang);
  TimeValue birth = time_of(p);
  std::string date = render_time(birth, lang, locale);
  bool fem = female_text(p.gender);
  bool day = birth.precision == TimePrecision::Day;
  bool year = birth.precision == TimePrecision::Year;

  std::string text;
  if (lang == "en") {
    text = name + " is a writer. ";
    text += name + (day ? " was born on " : " was born in ") + date + " in " + city_name + ". ";
    text += name + " is a citizen of " + country_name + ".";
  } else if (lang == "de") {
    text = name + (fem ? " ist Schriftstellerin. " : " ist Schriftsteller. ");
    text += name + (day ? " wurde am " : year ? " wurde " : " wurde im ") + date + " in " +
            city_name + " geboren. ";
    text += name + " besitzt die Staatsbürgerschaft von " + country_name + ".";
  } else if (lang == "es") {
    text = name + (fem ? " es escritora. " : " es escritor. ");
    text += name + (day ? " nació el " : " nació en ") + date + " en " + city_name + ". ";
    text += name + " tiene la ciudadanía de " + country_name + ".";
  } else if (lang == "fr") {
    text = name + (fem ? " est écrivaine. " : " est écrivain. ");
    text += name + (fem ? " est née " : " est né ") + (day ? "le " : "en ") + date + " à " +
            city_name + ". ";
    text += name + " possède la nationalité " + country.fr_genitive + ".";
  } else {
    text = name + (fem ? " è una scrittrice. " : " è uno scrittore. ");
    text += name + (fem ? " è nata " : " è nato ") + (day ? "il " : "nel ") + date + " a " +
            city_name + ". ";
    text += name + (fem ? " è cittadina " : " è cittadino ") + country.it_genitive + ".";
  }

  if (p.gender == PersonGender::PronounFemale) {
    if (lang == "en") text += " She taught in Hamburg for many years.";
    if (lang == "de") text += " Sie unterrichtete viele Jahre in Hamburg.";
    if (lang == "es") text += " Ella enseñó en Hamburgo durante muchos años.";
    if (lang == "fr") text += " Elle a enseigné à Hambourg pendant des années.";
    if (lang == "it") text += " Lei insegnò ad Amburgo per molti anni.";
  } else if (p.gender == PersonGender::PronounMale) {
    if (lang == "en") text += " He painted in Rome for decades.";
    if (lang == "de") text += " Er malte jahrzehntelang in Rom.";
    if (lang == "es") text += " Él pintó en Roma durante décadas.";
    if (lang == "fr") text += " Il a peint à Rome pendant des décennies.";
    if (lang == "it") text += " Lui dipinse a Roma per decenni.";
  }
  return text;
}

std::string book_page_text(const BookSpec& b, const std::string& lang) {
  std::string title = b.titles.get(lang);
  std::string author = b.author_name;
  std::string text;
  if (lang == "en") {
    text = title + " is a book. ";
    text += b.title_in_author_sentence ? title + " was written by " + author + "."
                                       : "It was written by " + author + ".";
  } else if (lang == "de") {
    text = title + " ist ein Buch. ";
    text += b.title_in_author_sentence ? title + " wurde von " + author + " geschrieben."
                                       : "Das Werk wurde von " + author + " geschrieben.";
  } else if (lang == "es") {
    text = title + " es un libro. ";
    text += b.title_in_author_sentence ? title + " fue escrito por " + author + "."
                                       : "La obra fue escrita por " + author + ".";
  } else if (lang == "fr") {
    text = title + " est un livre. ";
    text += b.title_in_author_sentence ? title + " a été écrit par " + author + "."
                                       : "L'ouvrage a été écrit par " + author + ".";
  } else {
    text = title + " è un libro. ";
    text += b.title_in_author_sentence ? title + " è stato scritto da " + author + "."
                                       : "L'opera è stata scritta da " + author + ".";
  }
  return text;
}

std::string country_page_text(const CountrySpec& c, const std::string& lang) {
  std::string name = c.labels.get(lang);
  std::string capital = city_by_qid(c.capital_qid).labels.get(lang);
  if (lang == "en") {
    return name + " is a sovereign state. The capital of " + name + " is " + capital + ".";
  }
  if (lang == "de") {
    return name + " ist ein Staat. Die Hauptstadt von " + name + " ist " + capital + ".";
  }
  if (lang == "es") {
    return name + " es un país. La capital de " + name + " es " + capital + ".";
  }
  if (lang == "fr") {
    return std::string(c.fr_subject) + " est un pays. La capitale " + c.fr_genitive + " est " +
           capital + ".";
  }
  return std::string(c.it_subject) + " è un paese. La capitale " + c.it_genitive + " è " +
         capital + ".";
}

std::string city_page_text(const CitySpec& c, const std::string& lang) {
  std::string name = c.labels.get(lang);
  const CountrySpec& country = country_by_qid(c.country_qid);
  std::string country_name = country.labels.get(lang);
  if (lang == "en") return name + " is a city. " + name + " is located in " + country_name + ".";
  if (lang == "de") return name + " ist eine Stadt. " + name + " liegt in " + country_name + ".";
  if (lang == "es") {
    return name + " es una ciudad. " + name + " se encuentra en " + country_name + ".";
  }
  if (lang == "fr") {
    return name + " est une ville. " + name + " se trouve " + country.fr_locative + ".";
  }
  return name + " è una città. " + name + " si trova " + country.it_locative + ".";
}

std::string amazon_page_text(const std::string& lang) {
  if (lang == "en") {
    return "The Amazon is a river in South America. The Amazon proper runs mostly through "
           "Brazil and Peru, and is part of the border between Colombia and Venezuela.";
  }
  if (lang == "de") {
    return "Der Amazonas ist ein Strom in Südamerika. Der Fluss Amazonas gab seinerseits dem "
           "Amazonasbecken sowie mehreren gleichnamigen Verwaltungseinheiten in Brasilien, "
           "Venezuela, Kolumbien und Peru seinen Namen. Der Amazonas ist etwa 6575 Kilometer "
           "lang.";
  }
  if (lang == "es") {
    return "El río Amazonas es un río de América del Sur, que atraviesa Perú, Colombia y "
           "Brasil. El Amazonas desemboca en el océano Atlántico.";
  }
  if (lang == "fr") {
    return "L'Amazone est un fleuve d'Amérique du Sud. Le fleuve prend alors le nom d'Amazonas "
           "au Pérou et en Colombie, puis celui de rio Solimões en entrant au Brésil au niveau "
           "de la triple frontière.";
  }
  return "Il Rio delle Amazzoni è un fiume dell'America Meridionale che attraversa Perù, "
         "Colombia e Brasile e sfocia nell'oceano Atlantico.";
}

std::string danube_page_text(const std::string& lang) {
  if (lang == "en") {
    return "The Danube is a river in Central Europe. The Danube flows through Germany and "
           "several other states.";
  }
  if (lang == "de") {
    return "Die Donau ist ein Fluss in Mitteleuropa. Die Donau fließt durch Deutschland und "
           "weitere Staaten. Die Donau ist etwa 2850 Kilometer lang.";
  }
  if (lang == "es") {
    return "El Danubio es un río de Europa Central. El Danubio atraviesa Alemania y otros "
           "países.";
  }
  if (lang == "fr") {
    return "Le Danube est un fleuve d'Europe centrale. Le Danube traverse l'Allemagne et "
           "d'autres États.";
  }
  return "Il Danubio è un fiume dell'Europa centrale. Il Danubio attraversa la Germania e "
         "altri paesi.";
}

}  // namespace

void write_fixture(const FixtureOptions& options) {
  std::filesystem::create_directories(options.out_dir);
  LocaleTable locale = LocaleTable::load(options.data_dir / "locale.tsv");

  std::vector<json> kb_lines;

  // Classes and value entities referenced by statements.
  kb_lines.push_back(entity_json("Q5", {{"en", "human"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q515", {{"en", "city"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q571", {{"en", "book"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q4022", {{"en", "river"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q6256", {{"en", "country"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q6581097", {{"en", "male"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q6581072", {{"en", "female"}}, {}, json::array()));
  kb_lines.push_back(entity_json("Q828224",
                                 {{"en", "kilometre"},
                                  {"de", "Kilometer"},
                                  {"es", "kilómetro"},
                                  {"fr", "kilomètre"},
                                  {"it", "chilometro"}},
                                 {}, json::array()));

  for (const CountrySpec& c : kCountries) {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q6256"));
    stmts.push_back(entity_stmt("P36", c.capital_qid));
    kb_lines.push_back(entity_json(c.qid, all_labels(c.labels), {}, stmts));
  }
  for (const CitySpec& c : kCities) {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q515"));
    stmts.push_back(entity_stmt("P17", c.country_qid));
    kb_lines.push_back(entity_json(c.qid, all_labels(c.labels), {}, stmts));
  }
  for (const PersonSpec& p : kPeople) {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q5"));
    if (p.gender == PersonGender::Male) stmts.push_back(entity_stmt("P21", "Q6581097"));
    if (p.gender == PersonGender::Female) stmts.push_back(entity_stmt("P21", "Q6581072"));
    stmts.push_back(entity_stmt("P19", p.city_qid));
    stmts.push_back(entity_stmt("P27", p.country_qid));
    stmts.push_back(time_stmt("P569", p));
    std::map<std::string, std::string> labels;
    for (const auto& lang : kLangs) {
      if (p.only_en_de && lang != "en" && lang != "de") continue;
      labels[lang] = p.name;
    }
    kb_lines.push_back(entity_json(p.qid, labels, {}, stmts));
  }
  for (const BookSpec& b : kBooks) {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q571"));
    stmts.push_back(entity_stmt("P50", b.author_qid));
    kb_lines.push_back(entity_json(b.qid, all_labels(b.titles), {}, stmts));
  }

  {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q4022"));
    stmts.push_back(entity_stmt("P17", "Q155"));
    stmts.push_back(entity_stmt("P17", "Q419"));
    stmts.push_back(entity_stmt("P17", "Q739"));
    stmts.push_back(entity_stmt("P17", "Q717"));
    stmts.push_back(quantity_stmt("P2043", 6575, "Q828224"));
    kb_lines.push_back(entity_json(
        "Q3783",
        {{"en", "Amazon"},
         {"de", "Amazonas"},
         {"es", "Amazonas"},
         {"fr", "Amazone"},
         {"it", "Rio delle Amazzoni"}},
        {{"en", {"Amazon River"}}, {"fr", {"Amazonas"}}}, stmts));
  }
  {
    json stmts = json::array();
    stmts.push_back(entity_stmt("P31", "Q4022"));
    stmts.push_back(entity_stmt("P17", "Q183"));
    stmts.push_back(quantity_stmt("P2043", 2850, "Q828224"));
    kb_lines.push_back(entity_json("Q1653",
                                   {{"en", "Danube"},
                                    {"de", "Donau"},
                                    {"es", "Danubio"},
                                    {"fr", "Danube"},
                                    {"it", "Danubio"}},
                                   {}, stmts));
  }

  std::string kb_out;
  for (const json& j : kb_lines) {
    kb_out += j.dump();
    kb_out += '\n';
  }
  kb_out += "{ this line is deliberately not valid json\n";
  write_text_file(options.out_dir / "kb.jsonl", kb_out);

  // Corpora, one file per language.
  for (const auto& lang : kLangs) {
    std::vector<json> pages;
    auto page = [&](const std::string& qid, const std::string& title, const std::string& text) {
      pages.push_back(json{{"qid", qid}, {"language", lang}, {"title", title}, {"text", text}});
    };

    for (const CountrySpec& c : kCountries) page(c.qid, c.labels.get(lang), country_page_text(c, lang));
    for (const CitySpec& c : kCities) page(c.qid, c.labels.get(lang), city_page_text(c, lang));
    for (const PersonSpec& p : kPeople) {
      if (!p.has_pages) continue;
      page(p.qid, p.name, person_page_text(p, lang, locale));
    }
    for (const BookSpec& b : kBooks) page(b.qid, b.titles.get(lang), book_page_text(b, lang));
    page("Q3783", "Amazon", amazon_page_text(lang));
    page("Q1653", "Danube", danube_page_text(lang));
    // A page with no KB entity, and one with empty text.
    page("Q999999", "Orphan", "This page has no knowledge-base entry.");
    page("Q999998", "Empty", "");

    std::string out;
    for (const json& j : pages) {
      out += j.dump();
      out += '\n';
    }
    out += "{ not json either\n";
    write_text_file(options.out_dir / ("corpus." + lang + ".jsonl"), out);

    // Vocabulary: word types of every page text, minus every 7th, so
    // coverage is deterministic but below 100%.
    std::set<std::string> types;
    for (const json& j : pages) {
      auto t = word_types(j.at("text").get<std::string>());
      types.insert(t.begin(), t.end());
    }
    std::string vocab_out;
    size_t idx = 0;
    for (const std::string& t : types) {
      if (idx++ % 7 != 6) {
        vocab_out += t;
        vocab_out += '\n';
      }
    }
    write_text_file(options.out_dir / ("vocab." + lang + ".txt"), vocab_out);
  }

  // Ready-to-run configuration.
  std::string cfg;
  cfg += "kb = kb.jsonl\n";
  for (const auto& lang : kLangs) cfg += "corpus." + lang + " = corpus." + lang + ".jsonl\n";
  for (const auto& lang : kLangs) cfg += "vocab." + lang + " = vocab." + lang + ".txt\n";
  std::filesystem::path data = std::filesystem::absolute(options.data_dir);
  cfg += "templates = " + (data / "templates.tsv").string() + "\n";
  cfg += "properties = " + (data / "properties.tsv").string() + "\n";
  cfg += "locale = " + (data / "locale.tsv").string() + "\n";
  cfg += "agreement = " + (data / "agreement.tsv").string() + "\n";
  cfg += "abbrev = " + (data / "abbrev.tsv").string() + "\n";
  cfg += "pronouns = " + (data / "pronouns.tsv").string() + "\n";
  cfg += "langs = en,de,es,fr,it\n";
  cfg += "negative_ratio = 0.2\n";
  cfg += "fractions = 0.8,0.1,0.1\n";
  cfg += "folds = 5\n";
  cfg += "peek = true\n";
  cfg += "seed = 7\n";
  write_text_file(options.out_dir / "fixture.cfg", cfg);
}

}  // namespace relq
