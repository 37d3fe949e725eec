// Embedded reference dataset: the published incidence matrix and the
// provincial indicator tables (52 provinces x {2021, 2022} x {total,
// female, male}) that the verify suite replays. Values are verbatim;
// printed shares keep their original fractional digit count.
#include "iashare/fixtures.hpp"

namespace iashare::fixtures {

const std::array<MatrixRow, 88> kIncidenceMatrix = {{
    {1, 600, "Agricultura"},
    {2, 600, "Silvicultura"},
    {3, 600, "Pesca y acuicultura"},
    {5, 800, "Extracción carbón"},
    {6, 800, "Extracción petróleo y gas"},
    {7, 800, "Minerales metálicos"},
    {8, 800, "Otras industrias extractivas"},
    {9, 800, "Apoyo a extractivas"},
    {10, 1450, "Alimentación"},
    {11, 1450, "Bebidas"},
    {12, 1100, "Tabaco"},
    {13, 1100, "Textil"},
    {14, 1100, "Confección"},
    {15, 1100, "Cuero y calzado"},
    {16, 1100, "Madera y corcho"},
    {17, 1100, "Papel"},
    {18, 1100, "Artes gráficas"},
    {19, 1650, "Coquerías y refino"},
    {20, 1650, "Química"},
    {21, 1650, "Farmacéutica"},
    {22, 1650, "Caucho y plástico"},
    {23, 1650, "Minerales no metálicos"},
    {24, 1650, "Metalurgia"},
    {25, 1100, "Productos metálicos"},
    {26, 2600, "Informáticos / electrónicos"},
    {27, 1650, "Eléctrico"},
    {28, 1650, "Maquinaria"},
    {29, 1650, "Automoción"},
    {30, 1650, "Transporte (fabricación)"},
    {31, 1100, "Muebles"},
    {32, 1100, "Otras manufactureras"},
    {33, 1100, "Reparación e instalación"},
    {35, 1100, "Energía"},
    {36, 1100, "Agua"},
    {37, 1100, "Aguas residuales"},
    {38, 1100, "Residuos"},
    {39, 1100, "Descontaminación"},
    {41, 950, "Edificación"},
    {42, 1700, "Ingeniería civil"},
    {43, 950, "Construcción especializada"},
    {45, 3050, "Vehículos"},
    {46, 3050, "Mayorista"},
    {47, 3050, "Minorista"},
    {49, 1100, "Transporte terrestre"},
    {50, 1100, "Transporte marítimo"},
    {51, 1100, "Transporte aéreo"},
    {52, 2000, "Almacenamiento"},
    {53, 2000, "Correos"},
    {55, 2500, "Alojamiento"},
    {56, 2500, "Comidas y bebidas"},
    {58, 2500, "Edición"},
    {59, 2500, "Audiovisual"},
    {60, 2500, "Radio y TV"},
    {61, 3000, "Telecomunicaciones"},
    {62, 3000, "Informática y consultoría"},
    {63, 3000, "Servicios de información"},
    {64, 2800, "Servicios financieros"},
    {65, 2800, "Seguros"},
    {66, 2900, "Auxiliares financieros"},
    {68, 2800, "Inmobiliarias"},
    {69, 2400, "Jurídicas y contabilidad"},
    {70, 2600, "Consultoría gestión"},
    {71, 2600, "Ingeniería y arquitectura"},
    {72, 2500, "I+D"},
    {73, 2500, "Publicidad"},
    {74, 2400, "Otras profesionales"},
    {75, 1500, "Veterinarias"},
    {77, 2600, "Alquiler"},
    {78, 2600, "Empleo"},
    {79, 2600, "Agencias de viaje"},
    {80, 2000, "Seguridad privada"},
    {81, 1100, "Jardinería y edificios"},
    {82, 2900, "Administrativas y apoyo"},
    {84, 1950, "Administración pública"},
    {85, 2300, "Educación"},
    {86, 1200, "Sanidad"},
    {87, 1500, "Residencias"},
    {88, 1500, "Servicios sociales"},
    {90, 2300, "Artes y espectáculos"},
    {91, 2500, "Bibliotecas y museos"},
    {92, 2300, "Juegos de azar"},
    {93, 2200, "Deportes"},
    {94, 2500, "Asociaciones"},
    {95, 1100, "Reparación"},
    {96, 2000, "Servicios personales"},
    {97, 2000, "Hogares empleadores"},
    {98, 2000, "Hogares productores"},
    {99, 1400, "Organismos extraterritoriales"},
}};

const std::array<ReferenceRow, 52> kTotal2022 = {{
    {1, 142789, 27818, 1948, 4},
    {2, 160804, 29534, 1837, 4},
    {3, 698158, 141648, 2029, 4},
    {4, 298738, 55237, 1849, 4},
    {5, 63277, 11970, 1892, 4},
    {6, 257720, 48052, 1865, 4},
    {7, 467233, 95316, 2040, 3},
    {8, 2475590, 517127, 2089, 4},
    {9, 150488, 28180, 1873, 4},
    {10, 148769, 27471, 1847, 4},
    {11, 410949, 82252, 2002, 4},
    {12, 247936, 49170, 1983, 4},
    {13, 194797, 35291, 1812, 4},
    {14, 309610, 59911, 1935, 4},
    {15, 385483, 76080, 1973, 4},
    {16, 76653, 14159, 1847, 4},
    {17, 379389, 75005, 1977, 4},
    {18, 357867, 69896, 1953, 4},
    {19, 130380, 25201, 1932, 4},
    {20, 287294, 58018, 2019, 4},
    {21, 210901, 39931, 1893, 4},
    {22, 112931, 20640, 1829, 4},
    {23, 211782, 39780, 1879, 4},
    {24, 188858, 36682, 1942, 4},
    {25, 195192, 36661, 1878, 4},
    {26, 134599, 24876, 1847, 4},
    {27, 112944, 21706, 1922, 4},
    {28, 3014953, 653696, 2168, 4},
    {29, 665807, 133583, 2006, 4},
    {30, 586741, 109490, 1867, 4},
    {31, 276597, 52114, 1885, 4},
    {32, 105511, 19840, 1881, 4},
    {33, 370728, 73723, 1990, 3},
    {34, 63481, 11703, 1843, 4},
    {35, 386306, 81422, 2108, 4},
    {36, 421238, 82290, 1954, 4},
    {37, 129903, 25293, 1947, 4},
    {38, 416670, 87698, 2105, 4},
    {39, 235535, 46665, 1981, 4},
    {40, 68326, 12955, 1896, 4},
    {41, 733484, 147797, 2015, 4},
    {42, 39124, 7052, 1803, 4},
    {43, 332867, 65209, 1959, 4},
    {44, 57348, 10267, 1790, 3},
    {45, 296489, 56217, 1896, 4},
    {46, 1083550, 220091, 2031, 4},
    {47, 220675, 43694, 1980, 3},
    {48, 474815, 95544, 2012, 4},
    {49, 65791, 11981, 1821, 4},
    {50, 421764, 82476, 1956, 4},
    {51, 28369, 5776, 2036, 4},
    {52, 29888, 6075, 2033, 4},
}};

const std::array<ReferenceRow, 52> kTotal2021 = {{
    {1, 137916, 26977, 1956, 4},
    {2, 153694, 28182, 1834, 4},
    {3, 658787, 133720, 2030, 3},
    {4, 288223, 53278, 1849, 4},
    {5, 60731, 11469, 1889, 4},
    {6, 248124, 46291, 1866, 4},
    {7, 443628, 90552, 2041, 4},
    {8, 2383924, 498004, 2089, 4},
    {9, 146255, 27333, 1869, 4},
    {10, 143786, 26588, 1849, 4},
    {11, 390799, 77929, 1994, 4},
    {12, 239073, 47509, 1987, 4},
    {13, 187679, 33906, 1807, 4},
    {14, 299707, 57775, 1927, 4},
    {15, 368981, 73046, 1981, 4},
    {16, 76196, 14382, 1887, 4},
    {17, 363553, 71796, 1974, 4},
    {18, 347482, 67415, 1941, 4},
    {19, 124551, 23716, 1905, 4},
    {20, 281226, 56585, 2012, 4},
    {21, 200942, 37948, 1888, 4},
    {22, 107965, 19983, 1851, 4},
    {23, 204917, 38550, 1882, 4},
    {24, 178230, 34737, 1948, 4},
    {25, 184630, 34395, 1862, 4},
    {26, 125568, 23474, 1870, 3},
    {27, 107270, 20632, 1924, 4},
    {28, 2906065, 626297, 2157, 4},
    {29, 646256, 128796, 1993, 4},
    {30, 556100, 103870, 1869, 4},
    {31, 259823, 48664, 1873, 4},
    {32, 100386, 18620, 1855, 4},
    {33, 355985, 67295, 1890, 3},
    {34, 60928, 11233, 1844, 4},
    {35, 367617, 77333, 2104, 4},
    {36, 400336, 77985, 1947, 4},
    {37, 126073, 24579, 1950, 3},
    {38, 391222, 82396, 2106, 4},
    {39, 227140, 45022, 1982, 4},
    {40, 65721, 12441, 1893, 4},
    {41, 704316, 141197, 2005, 4},
    {42, 38521, 6918, 1796, 4},
    {43, 316839, 61925, 1954, 4},
    {44, 55229, 9886, 1790, 3},
    {45, 282255, 53484, 1895, 4},
    {46, 1042481, 211636, 2030, 3},
    {47, 214866, 42563, 1981, 4},
    {48, 465681, 93872, 2016, 4},
    {49, 64152, 11652, 1816, 4},
    {50, 408177, 79926, 1958, 4},
    {51, 28050, 5742, 2047, 4},
    {52, 29783, 6058, 2034, 4},
}};

const std::array<ReferenceRow, 52> kFemale2022 = {{
    {1, 68127, 13945, 2047, 4},
    {2, 70611, 14067, 1992, 4},
    {3, 319236, 68348, 2141, 4},
    {4, 133171, 27485, 2064, 4},
    {5, 28231, 5687, 2014, 4},
    {6, 112997, 22692, 2008, 4},
    {7, 215956, 46946, 2174, 4},
    {8, 1192178, 256308, 2150, 3},
    {9, 69033, 13898, 2013, 4},
    {10, 67238, 13246, 1970, 3},
    {11, 178617, 37821, 2117, 4},
    {12, 114349, 24709, 2161, 4},
    {13, 84883, 16754, 1974, 4},
    {14, 148321, 29311, 1976, 4},
    {15, 189360, 38462, 2031, 4},
    {16, 35670, 6977, 1957, 4},
    {17, 183522, 37527, 2045, 4},
    {18, 175346, 35039, 1998, 4},
    {19, 61319, 12113, 1975, 4},
    {20, 160032, 33229, 2077, 4},
    {21, 90402, 17803, 1969, 4},
    {22, 49695, 9582, 1927, 4},
    {23, 98191, 18884, 1923, 4},
    {24, 90996, 17835, 1960, 3},
    {25, 87076, 16341, 1877, 4},
    {26, 65324, 13069, 2001, 4},
    {27, 45766, 8894, 1943, 4},
    {28, 1474951, 323634, 2194, 4},
    {29, 324669, 67968, 2094, 4},
    {30, 270205, 54581, 2020, 3},
    {31, 135176, 27149, 2008, 4},
    {32, 43011, 8314, 1934, 4},
    {33, 186251, 39008, 2094, 4},
    {34, 29995, 5986, 1996, 4},
    {35, 194685, 41500, 2132, 4},
    {36, 203709, 40208, 1974, 4},
    {37, 59790, 12291, 2056, 4},
    {38, 200032, 43923, 2196, 4},
    {39, 110823, 23372, 2109, 4},
    {40, 30663, 6228, 2031, 4},
    {41, 331468, 69986, 2111, 4},
    {42, 17857, 3472, 1944, 4},
    {43, 153435, 32218, 2100, 2},
    {44, 25785, 5045, 1957, 4},
    {45, 128547, 26185, 2037, 4},
    {46, 506749, 108777, 2147, 4},
    {47, 103781, 21715, 2092, 4},
    {48, 230311, 48554, 2108, 4},
    {49, 29721, 5814, 1956, 4},
    {50, 198316, 41065, 2071, 4},
    {51, 11358, 2382, 2098, 4},
    {52, 12316, 2524, 2050, 3},
}};

const std::array<ReferenceRow, 52> kMale2022 = {{
    {1, 74662, 13873, 1858, 4},
    {2, 90193, 15468, 1715, 4},
    {3, 378922, 73300, 1934, 4},
    {4, 165567, 27753, 1676, 4},
    {5, 35046, 6283, 1793, 4},
    {6, 144723, 25360, 1752, 4},
    {7, 251277, 48370, 1925, 4},
    {8, 1283412, 260819, 2032, 4},
    {9, 81455, 14281, 1753, 4},
    {10, 81531, 14225, 1745, 4},
    {11, 232332, 44430, 1912, 4},
    {12, 133587, 24461, 1831, 4},
    {13, 109914, 18537, 1687, 4},
    {14, 161289, 29258, 1814, 4},
    {15, 196123, 38327, 1955, 4},
    {16, 41006, 6751, 1646, 4},
    {17, 195867, 38185, 1950, 3},
    {18, 182521, 33857, 1855, 4},
    {19, 69061, 12734, 1844, 4},
    {20, 157994, 31807, 2012, 4},
    {21, 120499, 22127, 1837, 4},
    {22, 63236, 10778, 1704, 4},
    {23, 113591, 20896, 1839, 4},
    {24, 97862, 18006, 1840, 3},
    {25, 108116, 19833, 1835, 4},
    {26, 74299, 12801, 1723, 4},
    {27, 67178, 12139, 1807, 4},
    {28, 1541257, 326429, 2118, 4},
    {29, 341138, 65615, 1923, 4},
    {30, 316297, 56612, 1790, 3},
    {31, 141240, 26987, 1911, 4},
    {32, 62500, 11387, 1822, 4},
    {33, 209466, 39008, 1864, 4},
    {34, 33486, 5770, 1723, 4},
    {35, 191621, 40922, 2135, 4},
    {36, 217529, 41082, 1888, 4},
    {37, 70113, 13002, 1854, 4},
    {38, 216638, 43775, 2021, 4},
    {39, 124712, 23293, 1868, 4},
    {40, 37663, 6727, 1786, 4},
    {41, 402016, 77812, 1936, 4},
    {42, 21267, 3580, 1683, 4},
    {43, 179432, 32991, 1839, 4},
    {44, 31563, 5222, 1654, 4},
    {45, 167942, 30031, 1788, 4},
    {46, 576801, 111313, 1930, 3},
    {47, 116894, 21979, 1880, 3},
    {48, 244504, 46990, 1922, 4},
    {49, 36070, 6167, 1710, 3},
    {50, 223448, 41412, 1853, 4},
    {51, 17011, 3394, 1995, 4},
    {52, 17572, 3551, 2021, 4},
}};

const std::array<ReferenceRow, 52> kFemale2021 = {{
    {1, 63254, 13012, 2057, 4},
    {2, 63501, 12503, 1967, 4},
    {3, 303895, 65008, 2140, 3},
    {4, 122656, 25023, 2041, 4},
    {5, 25685, 5184, 2018, 4},
    {6, 108981, 21441, 1967, 4},
    {7, 204288, 44516, 2179, 4},
    {8, 1140512, 247802, 2173, 4},
    {9, 64800, 13062, 2015, 4},
    {10, 62255, 12322, 1979, 4},
    {11, 168467, 35604, 2113, 4},
    {12, 112428, 24089, 2142, 4},
    {13, 77765, 15264, 1963, 4},
    {14, 138418, 27629, 1996, 4},
    {15, 177858, 36864, 2073, 4},
    {16, 34521, 6767, 1960, 3},
    {17, 167686, 34055, 2031, 4},
    {18, 165349, 32552, 1968, 4},
    {19, 55563, 10899, 1962, 4},
    {20, 153232, 31293, 2043, 4},
    {21, 87319, 17308, 1982, 4},
    {22, 44729, 8575, 1918, 4},
    {23, 91326, 17529, 1919, 4},
    {24, 80368, 15939, 1983, 4},
    {25, 76514, 14104, 1843, 4},
    {26, 62551, 12514, 2001, 4},
    {27, 44095, 8444, 1915, 4},
    {28, 1415473, 310717, 2195, 4},
    {29, 305118, 64291, 2107, 4},
    {30, 256360, 51790, 2020, 3},
    {31, 130180, 26179, 2010, 3},
    {32, 40924, 7784, 1902, 4},
    {33, 180324, 37879, 2100, 2},
    {34, 27442, 5478, 1996, 4},
    {35, 176002, 36063, 2049, 4},
    {36, 196831, 38241, 1943, 4},
    {37, 56417, 11550, 2046, 4},
    {38, 215698, 46333, 2147, 4},
    {39, 106560, 22527, 2114, 4},
    {40, 29240, 5833, 1996, 4},
    {41, 319923, 67607, 2114, 4},
    {42, 17254, 3350, 1942, 4},
    {43, 143404, 30059, 2096, 4},
    {44, 24702, 4804, 1945, 4},
    {45, 120829, 24756, 2050, 3},
    {46, 483403, 102165, 2114, 4},
    {47, 101085, 21085, 2086, 4},
    {48, 221950, 46007, 2072, 4},
    {49, 28082, 5419, 1929, 4},
    {50, 198895, 40741, 2047, 4},
    {51, 11260, 2381, 2114, 4},
    {52, 12248, 2507, 2047, 4},
}};

const std::array<ReferenceRow, 52> kMale2021 = {{
    {1, 74662, 13965, 1870, 3},
    {2, 90193, 15679, 1738, 4},
    {3, 378922, 73018, 1927, 4},
    {4, 165567, 27942, 1687, 4},
    {5, 35046, 6285, 1793, 4},
    {6, 144723, 25427, 1757, 4},
    {7, 239340, 46036, 1924, 4},
    {8, 1243412, 249202, 2004, 4},
    {9, 81455, 14271, 1752, 4},
    {10, 81531, 14266, 1751, 4},
    {11, 222332, 43346, 1949, 4},
    {12, 126645, 23426, 1850, 3},
    {13, 109914, 18648, 1697, 4},
    {14, 161289, 29479, 1829, 4},
    {15, 191123, 37193, 1946, 4},
    {16, 41006, 6780, 1653, 4},
    {17, 195867, 38260, 1953, 4},
    {18, 182521, 34366, 1883, 4},
    {19, 69061, 12833, 1858, 4},
    {20, 157994, 31700, 2008, 4},
    {21, 120499, 22245, 1846, 4},
    {22, 63236, 10800, 1708, 4},
    {23, 113591, 21274, 1872, 4},
    {24, 97862, 18314, 1872, 4},
    {25, 108116, 19325, 1788, 4},
    {26, 72005, 12361, 1717, 4},
    {27, 67178, 12155, 1809, 4},
    {28, 1489542, 315580, 2119, 4},
    {29, 341138, 66273, 1943, 4},
    {30, 316297, 56969, 1801, 4},
    {31, 141240, 27457, 1943, 4},
    {32, 62500, 11306, 1810, 3},
    {33, 209466, 39416, 1882, 4},
    {34, 33486, 5820, 1738, 4},
    {35, 191621, 40598, 2120, 3},
    {36, 217529, 41610, 1913, 4},
    {37, 70113, 13244, 1888, 4},
    {38, 216638, 43622, 2013, 4},
    {39, 120580, 22495, 1865, 4},
    {40, 37663, 6759, 1795, 4},
    {41, 402016, 78643, 1957, 4},
    {42, 21267, 3603, 1694, 4},
    {43, 179432, 33378, 1860, 3},
    {44, 31563, 5353, 1696, 4},
    {45, 167942, 30986, 1845, 4},
    {46, 576801, 111079, 1927, 4},
    {47, 116894, 22222, 1901, 4},
    {48, 244504, 47426, 1940, 3},
    {49, 36070, 6168, 1710, 3},
    {50, 223448, 41831, 1872, 4},
    {51, 16790, 3361, 2002, 4},
    {52, 17535, 3551, 2023, 4},
}};

} // namespace iashare::fixtures
