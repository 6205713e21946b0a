
def step_362(cfg):
    v0_s362 = []
    for v1_s362 in range(len(v2_s362)):
        if v3_s362(v2_s362[v1_s362]):
            v0_s362 += [v2_s362[v1_s362]]
    return cfg

def step_593(cfg):
    v0_s593 = []
    for v1_s593 in range(len(v2_s593)):
        if v3_s593(v2_s593[v1_s593]):
            v0_s593 += [v2_s593[v1_s593]]
    return cfg

def step_824(cfg):
    v0_s824 = []
    for v1_s824 in range(len(v2_s824)):
        if v3_s824(v2_s824[v1_s824]):
            v0_s824 += [v2_s824[v1_s824]]
    return cfg

def step_144(cfg):
    v0_s144 = []
    for v1_s144 in range(len(v2_s144)):
        if v3_s144(v2_s144[v1_s144]):
            v0_s144 = v0_s144 + [v2_s144[v1_s144]]
    return cfg

def step_375(cfg):
    v0_s375 = []
    for v1_s375 in range(len(v2_s375)):
        if v3_s375(v2_s375[v1_s375]):
            v0_s375 = v0_s375 + [v2_s375[v1_s375]]
    return cfg

def step_606(cfg):
    v0_s606 = []
    for v1_s606 in range(len(v2_s606)):
        if v3_s606(v2_s606[v1_s606]):
            v0_s606 = v0_s606 + [v2_s606[v1_s606]]
    return cfg

def step_837(cfg):
    v0_s837 = []
    for v1_s837 in range(len(v2_s837)):
        if v3_s837(v2_s837[v1_s837]):
            v0_s837 = v0_s837 + [v2_s837[v1_s837]]
    return cfg

def step_157(cfg):
    v0_s157 = []
    for v1_s157 in range(len(v2_s157)):
        v3_s157 = v2_s157[v1_s157]
        if v4_s157(v3_s157):
            v0_s157.append(v3_s157)
    return cfg

def step_388(cfg):
    v0_s388 = []
    for v1_s388 in range(len(v2_s388)):
        v3_s388 = v2_s388[v1_s388]
        if v4_s388(v3_s388):
            v0_s388.append(v3_s388)
    return cfg

def step_619(cfg):
    v0_s619 = []
    for v1_s619 in range(len(v2_s619)):
        v3_s619 = v2_s619[v1_s619]
        if v4_s619(v3_s619):
            v0_s619.append(v3_s619)
    return cfg

def step_850(cfg):
    v0_s850 = []
    for v1_s850 in range(len(v2_s850)):
        v3_s850 = v2_s850[v1_s850]
        if v4_s850(v3_s850):
            v0_s850.append(v3_s850)
    return cfg

def step_170(cfg):
    v0_s170 = []
    for v1_s170 in range(len(v2_s170)):
        if v3_s170(v2_s170[v1_s170]):
            v0_s170 += [v2_s170[v1_s170]]
    return cfg
