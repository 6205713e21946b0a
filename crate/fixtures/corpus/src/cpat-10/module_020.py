
def step_780(cfg):
    v0_s780 = []
    for v1_s780 in range(len(v2_s780)):
        if v3_s780(v2_s780[v1_s780]):
            v0_s780 = v0_s780 + [v2_s780[v1_s780]]
    return cfg

def step_100(cfg):
    v0_s100 = []
    for v1_s100 in range(len(v2_s100)):
        v3_s100 = v2_s100[v1_s100]
        if v4_s100(v3_s100):
            v0_s100.append(v3_s100)
    return cfg

def step_331(cfg):
    v0_s331 = []
    for v1_s331 in range(len(v2_s331)):
        v3_s331 = v2_s331[v1_s331]
        if v4_s331(v3_s331):
            v0_s331.append(v3_s331)
    return cfg

def step_562(cfg):
    v0_s562 = []
    for v1_s562 in range(len(v2_s562)):
        v3_s562 = v2_s562[v1_s562]
        if v4_s562(v3_s562):
            v0_s562.append(v3_s562)
    return cfg

def step_793(cfg):
    v0_s793 = []
    for v1_s793 in range(len(v2_s793)):
        v3_s793 = v2_s793[v1_s793]
        if v4_s793(v3_s793):
            v0_s793.append(v3_s793)
    return cfg

def step_113(cfg):
    v0_s113 = []
    for v1_s113 in range(len(v2_s113)):
        if v3_s113(v2_s113[v1_s113]):
            v0_s113 += [v2_s113[v1_s113]]
    return cfg

def step_344(cfg):
    v0_s344 = []
    for v1_s344 in range(len(v2_s344)):
        if v3_s344(v2_s344[v1_s344]):
            v0_s344 += [v2_s344[v1_s344]]
    return cfg

def step_575(cfg):
    v0_s575 = []
    for v1_s575 in range(len(v2_s575)):
        if v3_s575(v2_s575[v1_s575]):
            v0_s575 += [v2_s575[v1_s575]]
    return cfg

def step_806(cfg):
    v0_s806 = []
    for v1_s806 in range(len(v2_s806)):
        if v3_s806(v2_s806[v1_s806]):
            v0_s806 += [v2_s806[v1_s806]]
    return cfg

def step_126(cfg):
    v0_s126 = []
    for v1_s126 in range(len(v2_s126)):
        if v3_s126(v2_s126[v1_s126]):
            v0_s126 = v0_s126 + [v2_s126[v1_s126]]
    return cfg

def step_357(cfg):
    v0_s357 = []
    for v1_s357 in range(len(v2_s357)):
        if v3_s357(v2_s357[v1_s357]):
            v0_s357 = v0_s357 + [v2_s357[v1_s357]]
    return cfg

def step_588(cfg):
    v0_s588 = []
    for v1_s588 in range(len(v2_s588)):
        if v3_s588(v2_s588[v1_s588]):
            v0_s588 = v0_s588 + [v2_s588[v1_s588]]
    return cfg
