#pragma once

// Shipped composition and converse tables. Kept identical to data/*.comp and
// data/*.conv; the test suite checks the two copies agree.

namespace qcr::tables {

inline constexpr const char* kIa13Composition = R"TABLE(# Allen interval algebra composition: x R1 y, y R2 z -> x ? z
p p -> p
p m -> p
p o -> p
p s -> p
p f -> p|m|o|s|d
p d -> p|m|o|s|d
p e -> p
p d- -> p
p f- -> p
p s- -> p
p o- -> p|m|o|s|d
p m- -> p|m|o|s|d
p p- -> p|m|o|s|f|d|e|d-|f-|s-|o-|m-|p-
m p -> p
m m -> p
m o -> p
m s -> m
m f -> o|s|d
m d -> o|s|d
m e -> m
m d- -> p
m f- -> p
m s- -> m
m o- -> o|s|d
m m- -> f|e|f-
m p- -> d-|s-|o-|m-|p-
o p -> p
o m -> p
o o -> p|m|o
o s -> o
o f -> o|s|d
o d -> o|s|d
o e -> o
o d- -> p|m|o|d-|f-
o f- -> p|m|o
o s- -> o|d-|f-
o o- -> o|s|f|d|e|d-|f-|s-|o-
o m- -> d-|s-|o-
o p- -> d-|s-|o-|m-|p-
s p -> p
s m -> p
s o -> p|m|o
s s -> s
s f -> d
s d -> d
s e -> s
s d- -> p|m|o|d-|f-
s f- -> p|m|o
s s- -> s|e|s-
s o- -> f|d|o-
s m- -> m-
s p- -> p-
f p -> p
f m -> m
f o -> o|s|d
f s -> d
f f -> f
f d -> d
f e -> f
f d- -> d-|s-|o-|m-|p-
f f- -> f|e|f-
f s- -> o-|m-|p-
f o- -> o-|m-|p-
f m- -> p-
f p- -> p-
d p -> p
d m -> p
d o -> p|m|o|s|d
d s -> d
d f -> d
d d -> d
d e -> d
d d- -> p|m|o|s|f|d|e|d-|f-|s-|o-|m-|p-
d f- -> p|m|o|s|d
d s- -> f|d|o-|m-|p-
d o- -> f|d|o-|m-|p-
d m- -> p-
d p- -> p-
e p -> p
e m -> m
e o -> o
e s -> s
e f -> f
e d -> d
e e -> e
e d- -> d-
e f- -> f-
e s- -> s-
e o- -> o-
e m- -> m-
e p- -> p-
d- p -> p|m|o|d-|f-
d- m -> o|d-|f-
d- o -> o|d-|f-
d- s -> o|d-|f-
d- f -> d-|s-|o-
d- d -> o|s|f|d|e|d-|f-|s-|o-
d- e -> d-
d- d- -> d-
d- f- -> d-
d- s- -> d-
d- o- -> d-|s-|o-
d- m- -> d-|s-|o-
d- p- -> d-|s-|o-|m-|p-
f- p -> p
f- m -> m
f- o -> o
f- s -> o
f- f -> f|e|f-
f- d -> o|s|d
f- e -> f-
f- d- -> d-
f- f- -> f-
f- s- -> d-
f- o- -> d-|s-|o-
f- m- -> d-|s-|o-
f- p- -> d-|s-|o-|m-|p-
s- p -> p|m|o|d-|f-
s- m -> o|d-|f-
s- o -> o|d-|f-
s- s -> s|e|s-
s- f -> o-
s- d -> f|d|o-
s- e -> s-
s- d- -> d-
s- f- -> d-
s- s- -> s-
s- o- -> o-
s- m- -> m-
s- p- -> p-
o- p -> p|m|o|d-|f-
o- m -> o|d-|f-
o- o -> o|s|f|d|e|d-|f-|s-|o-
o- s -> f|d|o-
o- f -> o-
o- d -> f|d|o-
o- e -> o-
o- d- -> d-|s-|o-|m-|p-
o- f- -> d-|s-|o-
o- s- -> o-|m-|p-
o- o- -> o-|m-|p-
o- m- -> p-
o- p- -> p-
m- p -> p|m|o|d-|f-
m- m -> s|e|s-
m- o -> f|d|o-
m- s -> f|d|o-
m- f -> m-
m- d -> f|d|o-
m- e -> m-
m- d- -> p-
m- f- -> m-
m- s- -> p-
m- o- -> p-
m- m- -> p-
m- p- -> p-
p- p -> p|m|o|s|f|d|e|d-|f-|s-|o-|m-|p-
p- m -> f|d|o-|m-|p-
p- o -> f|d|o-|m-|p-
p- s -> f|d|o-|m-|p-
p- f -> p-
p- d -> f|d|o-|m-|p-
p- e -> p-
p- d- -> p-
p- f- -> p-
p- s- -> p-
p- o- -> p-
p- m- -> p-
p- p- -> p-
)TABLE";

inline constexpr const char* kIa13Converse = R"TABLE(# Allen interval algebra converse
p -> p-
m -> m-
o -> o-
s -> s-
f -> f-
d -> d-
e -> e
d- -> d
f- -> f
s- -> s
o- -> o
m- -> m
p- -> p
)TABLE";

inline constexpr const char* kRcc8Composition = R"TABLE(# RCC-8 composition: x R1 y, y R2 z -> x ? z
DC DC -> DC|EC|PO|TPP|NTPP|TPP-|NTPP-|EQ
DC EC -> DC|EC|PO|TPP|NTPP
DC PO -> DC|EC|PO|TPP|NTPP
DC TPP -> DC|EC|PO|TPP|NTPP
DC NTPP -> DC|EC|PO|TPP|NTPP
DC TPP- -> DC
DC NTPP- -> DC
DC EQ -> DC
EC DC -> DC|EC|PO|TPP-|NTPP-
EC EC -> DC|EC|PO|TPP|TPP-|EQ
EC PO -> DC|EC|PO|TPP|NTPP
EC TPP -> EC|PO|TPP|NTPP
EC NTPP -> PO|TPP|NTPP
EC TPP- -> DC|EC
EC NTPP- -> DC
EC EQ -> EC
PO DC -> DC|EC|PO|TPP-|NTPP-
PO EC -> DC|EC|PO|TPP-|NTPP-
PO PO -> DC|EC|PO|TPP|NTPP|TPP-|NTPP-|EQ
PO TPP -> PO|TPP|NTPP
PO NTPP -> PO|TPP|NTPP
PO TPP- -> DC|EC|PO|TPP-|NTPP-
PO NTPP- -> DC|EC|PO|TPP-|NTPP-
PO EQ -> PO
TPP DC -> DC
TPP EC -> DC|EC
TPP PO -> DC|EC|PO|TPP|NTPP
TPP TPP -> TPP|NTPP
TPP NTPP -> NTPP
TPP TPP- -> DC|EC|PO|TPP|TPP-|EQ
TPP NTPP- -> DC|EC|PO|TPP-|NTPP-
TPP EQ -> TPP
NTPP DC -> DC
NTPP EC -> DC
NTPP PO -> DC|EC|PO|TPP|NTPP
NTPP TPP -> NTPP
NTPP NTPP -> NTPP
NTPP TPP- -> DC|EC|PO|TPP|NTPP
NTPP NTPP- -> DC|EC|PO|TPP|NTPP|TPP-|NTPP-|EQ
NTPP EQ -> NTPP
TPP- DC -> DC|EC|PO|TPP-|NTPP-
TPP- EC -> EC|PO|TPP-|NTPP-
TPP- PO -> PO|TPP-|NTPP-
TPP- TPP -> PO|TPP|TPP-|EQ
TPP- NTPP -> PO|TPP|NTPP
TPP- TPP- -> TPP-|NTPP-
TPP- NTPP- -> NTPP-
TPP- EQ -> TPP-
NTPP- DC -> DC|EC|PO|TPP-|NTPP-
NTPP- EC -> PO|TPP-|NTPP-
NTPP- PO -> PO|TPP-|NTPP-
NTPP- TPP -> PO|TPP-|NTPP-
NTPP- NTPP -> PO|TPP|NTPP|TPP-|NTPP-|EQ
NTPP- TPP- -> NTPP-
NTPP- NTPP- -> NTPP-
NTPP- EQ -> NTPP-
EQ DC -> DC
EQ EC -> EC
EQ PO -> PO
EQ TPP -> TPP
EQ NTPP -> NTPP
EQ TPP- -> TPP-
EQ NTPP- -> NTPP-
EQ EQ -> EQ
)TABLE";

inline constexpr const char* kRcc8Converse = R"TABLE(# RCC-8 converse
DC -> DC
EC -> EC
PO -> PO
TPP -> TPP-
NTPP -> NTPP-
TPP- -> TPP
NTPP- -> NTPP
EQ -> EQ
)TABLE";

}  // namespace qcr::tables
