"""High-precision reference values used as oracles by the test suite.

All ordinates below are independently published zeros of the respective
L-functions, quoted to the stated number of decimal places.
"""

# Riemann zeta: first five zeros, 58 correct decimals.
ZETA_FIRST_FIVE = {
    1: "14.1347251417346937904572519835624702707842571156992431756855",
    2: "21.0220396387715549926284795938969027773343405249027817546295",
    3: "25.0108575801456887632137909925628218186595496725579966724965",
    4: "30.4248761258595132103118975305840913201815600237154401809621",
    5: "32.9350615877391896906623689640749034888127156035170390092800",
}

# First zero violating Gram's law (57 correct decimals).
ZETA_T126 = "279.229250927745189228409880451955359283492637405561293594727"

# The 1000th zero, 500 correct decimals.
ZETA_T1000 = (
    "1419."
    "42248094599568646598903807991681923210060106416601630"
    "46908146846086764175930104179113432911792099874809842"
    "32260560118741397447952650637067250834288983151845447"
    "68825259311594423942519548468770816394625633238145779"
    "15284185593431511879329057764279980127360524094461173"
    "37041818962494747459675690479839876840142804973590017"
    "35474131911629348658946395454231320810569901980719391"
    "75430299848814901931936718231264204272763589114878483"
    "29996467356160858436515425171824179566414953524432921"
    "93649483857772253460088"
)

# Asymptotic-equation solutions, accurate to 9 decimals.
ZETA_ASYMPTOTIC = {
    1: "14.134725142",
    10: "49.773832478",
    10**2: "236.524229666",
    10**3: "1419.422480946",
    10**4: "9877.782654006",
    10**5: "74920.827498994",
    10**6: "600269.677012445",
}

# Last asymptotic-equation solutions below n = 10^5 (9 decimals).
ZETA_NEAR_1E5 = {
    10**5 - 5: "74917.719415828",
    10**5 - 4: "74918.370580227",
    10**5 - 3: "74918.691433454",
    10**5 - 2: "74919.075161121",
    10**5 - 1: "74920.259793259",
    10**5: "74920.827498994",
}

# Closed-form Lambert-W estimate at n = 10^22 (digits as published).
ZETA_SEED_1E22 = "1.370919909931995308226636e21"

# Asymptotic-equation solutions for the lowest zeros, 32 correct decimals.
ZETA_ASYMPTOTIC_LOW = {
    1: "14.13472514173469379045725198356247",
    2: "21.02203963877155499262847959389690",
    3: "25.01085758014568876321379099256282",
    4: "30.42487612585951321031189753058409",
    5: "32.93506158773918969066236896407490",
}

# Dirichlet L, modulus 7, character index 2: zeros for n = -9..10
# (n <= 0 lie on the lower half-line), 50 correct decimals.
DIRICHLET_7_2 = {
    10: "25.68439458577475868571703403827676455384372032540097",
    9: "24.15466453997877089700472248737944003578203821931614",
    8: "21.65252506979642618329545373529843196334089625358303",
    7: "19.65122423323359536954110529158230382437142654926200",
    6: "17.16141654370607042290552256158565828745960439000612",
    5: "15.74686940763941532761353888536874657958310887967059",
    4: "13.85454287448149778875634224346689375234567535103602",
    3: "9.97989590209139315060581291354262017420478655402522",
    2: "8.41361099147117759845752355454727442365106861800819",
    1: "5.19811619946654558608428407430395403442607551643259",
    0: "-2.50937455292911971967838452268365746558148671924805",
    -1: "-7.48493173971596112913314844807905530366284046079242",
    -2: "-9.89354379409772210349418069925221744973779313289503",
    -3: "-12.25742488648921665489461478678500208978360618268664",
    -4: "-14.13507775903777080989456447454654848575048882728616",
    -5: "-17.71409256153115895322699037454043289926793578042465",
    -6: "-18.88909760017588073794865307957219593848843485334695",
    -7: "-20.60481911491253262583427068994945289180639925014034",
    -8: "-22.66635642792466587252079667063882618974425685038326",
    -9: "-25.28550752850252321309973718800386160807733038068585",
}

# Dirichlet L, modulus 7, character index 3: zeros for n = -9..10,
# 50 correct decimals.
DIRICHLET_7_3 = {
    10: "26.16994490801983565967242517629313321888238615283992",
    9: "23.20367246134665537826174805893362248072979160004334",
    8: "21.31464724410425595182027902594093075251557654412326",
    7: "20.03055898508203028994206564551578139558919887432101",
    6: "17.61605319887654241030080166645399190430725521508443",
    5: "15.93744820468795955688957399890407546316342953223035",
    4: "12.53254782268627400807230480038783642378927939761728",
    3: "10.73611998749339311587424153504894305046993275660967",
    2: "8.78555471449907536558015746317619235911936921514074",
    1: "4.35640162473628422727957479051551913297149929441224",
    0: "-6.20123004275588129466099054628663166500168462793701",
    -1: "-7.92743089809203774838798659746549239024181788857305",
    -2: "-11.01044486207249042239362741094860371668883190429106",
    -3: "-13.82986789986136757061236809479729216775842888684529",
    -4: "-16.01372713415040781987211528577709085306698639304444",
    -5: "-18.04485754217402476822077016067233558476519398664936",
    -6: "-19.11388571948958246184820859785760690560580302023623",
    -7: "-22.75640595577430793123629559665860790727892846161121",
    -8: "-23.95593843516797851393076448042024914372113079309104",
    -9: "-25.72310440610835748550521669187512401719774475488087",
}

# Dirichlet 7/3: the 1000th zero, 100 correct decimals.
DIRICHLET_7_3_T1000 = (
    "1037."
    "56371706920654296560046127698168717112749601359549"
    "01734503731679747841764715443496546207885576444206"
)

# Modular L-function with Ramanujan tau coefficients (weight 12):
# zeros to 50 correct decimals.
RAMANUJAN_ZEROS = {
    1: "9.22237939992110252224376719274347813552877062243201",
    2: "13.90754986139213440644668132877021949175755235351449",
    3: "17.44277697823447331355152513712726271870886652427527",
    4: "19.65651314195496100012728175632130280161555091200324",
    5: "22.33610363720986727568267445923624619245504695246527",
    6: "25.27463654811236535674532419313346311859592673122941",
    7: "26.80439115835040303257574923358456474715296800497933",
    8: "28.83168262418687544502196191298438972569093668609124",
    9: "31.17820949836025906449218889077405585464551198966267",
    10: "32.77487538223120744183045567331198999909916163721260",
    100: "143.08355526347845507373979776964664120256210342087127",
    200: "235.74710143999213667703807130733621035921210614210694",
    300: "318.36169446742310747533323741641236307865855919162340",
}

# Lambert-W seed values quoted to two decimals for low Dirichlet (7, 2)
# zeros, plus the modular n=2 seed; used as sanity anchors for seeding.
SEED_ANCHORS = {
    ("zeta", 1): 14.52,
    ("dirichlet-7-2", 10): 25.57,
    ("dirichlet-7-2", 0): -3.44,
    ("modular-12", 2): 12.46,
}

# Davenport-Heilbronn: the counting function skips levels 44 and 45; the
# first off-line zero sits at ordinate ~85.6993 (real part ~0.8085).
DH_MISSING = {44, 45}
DH_OFF_LINE_ORDINATE = 85.6993
